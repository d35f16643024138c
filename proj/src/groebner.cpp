#include "rednum/groebner.hpp"

#include <algorithm>
#include <set>

namespace rednum {

namespace {

std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = m[i];
    const unsigned shift = 4 * static_cast<unsigned>(i);
    if (e >= 1) mask |= 1ULL << shift;
    if (e >= 2) mask |= 1ULL << (shift + 1);
    if (e >= 4) mask |= 1ULL << (shift + 2);
    if (e >= 8) mask |= 1ULL << (shift + 3);
  }
  return mask;
}

// Integer-coefficient working polynomial. Over Q coefficients are kept
// primitive (fraction-free reduction); over F_p they are residues and the
// polynomial is kept monic.
struct WPoly {
  std::vector<Monomial> mons;
  std::vector<mpz_class> coefs;
  unsigned sugar = 0;

  bool empty() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
  const Monomial& lm() const { return mons.front(); }
};

class Reducers {
 public:
  void add(const WPoly* p) {
    Entry e{p, divmask(p->lm()), p->lm()};
    if (p->size() == 1) {
      monomials_.push_back(e);
    } else {
      polys_.push_back(e);
    }
  }
  void remove(const WPoly* p) {
    auto drop = [p](std::vector<Entry>& v) {
      v.erase(std::remove_if(v.begin(), v.end(), [p](const Entry& e) { return e.poly == p; }),
              v.end());
    };
    drop(monomials_);
    drop(polys_);
  }

  const WPoly* find(const Monomial& m) const {
    const std::uint64_t mask = divmask(m);
    for (const auto& e : monomials_) {
      if ((e.mask & ~mask) == 0 && e.lm.divides(m)) return e.poly;
    }
    const WPoly* best = nullptr;
    for (const auto& e : polys_) {
      if ((e.mask & ~mask) == 0 && e.lm.divides(m)) {
        if (best == nullptr || e.poly->size() < best->size()) best = e.poly;
        if (best->size() <= 2) break;
      }
    }
    return best;
  }

 private:
  struct Entry {
    const WPoly* poly;
    std::uint64_t mask;
    Monomial lm;
  };
  std::vector<Entry> monomials_;
  std::vector<Entry> polys_;
};

class Engine {
 public:
  Engine(const Field& field, const MonomialOrder& order) : field_(field), order_(order) {}

  const MonomialOrder& order() const { return order_; }
  bool rational() const { return field_.is_rational(); }

  WPoly from_poly(const Polynomial& f) const {
    WPoly w;
    if (f.is_zero()) return w;
    mpz_class den = 1;
    if (rational()) {
      for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    std::vector<std::pair<Monomial, mpz_class>> tmp;
    tmp.reserve(f.size());
    for (const auto& t : f.terms()) {
      mpz_class c = t.coef.get_num() * (den / t.coef.get_den());
      tmp.emplace_back(t.mono, std::move(c));
    }
    std::sort(tmp.begin(), tmp.end(),
              [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first) > 0; });
    for (auto& [m, c] : tmp) {
      w.mons.push_back(m);
      w.coefs.push_back(std::move(c));
    }
    w.sugar = f.total_degree();
    normalize(w);
    return w;
  }

  Polynomial to_poly(const WPoly& w, const RingRef& ring) const {
    std::vector<Term> terms;
    terms.reserve(w.size());
    if (w.empty()) return PolyBuilder::from_sorted(ring, {});
    if (rational()) {
      const mpq_class lc(w.coefs.front());
      for (std::size_t i = 0; i < w.size(); ++i) terms.push_back({mpq_class(w.coefs[i]) / lc, w.mons[i]});
    } else {
      const Scalar inv = field_.inv(Scalar(w.coefs.front()));
      for (std::size_t i = 0; i < w.size(); ++i) terms.push_back({field_.mul(Scalar(w.coefs[i]), inv), w.mons[i]});
    }
    return PolyBuilder::from_sorted(ring, std::move(terms));
  }

  // Q: divide by content, positive leading coefficient. F_p: monic.
  void normalize(WPoly& w) const {
    if (w.empty()) return;
    if (rational()) {
      mpz_class g = 0;
      for (const auto& c : w.coefs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
      }
      if (w.coefs.front() < 0) g = -g;
      if (g != 1) {
        for (auto& c : w.coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      }
    } else {
      if (w.coefs.front() == 1) return;
      const mpz_class inv = field_.inv(Scalar(w.coefs.front())).get_num();
      for (auto& c : w.coefs) {
        c *= inv;
        field_.reduce_integer(c);
      }
    }
  }

  // f <- a*f - b*q*g, where the term of f at `pos` cancels.
  void sub_mul(WPoly& f, const mpz_class& a, const mpz_class& b, const Monomial& q, const WPoly& g) const {
    WPoly out;
    out.mons.reserve(f.size() + g.size());
    out.coefs.reserve(f.size() + g.size());
    const bool scale = a != 1;
    std::size_t i = 0, j = 0;
    Monomial qm;
    bool have_q = false;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have_q) {
        qm = g.mons[j] * q;
        have_q = true;
      }
      int c;
      if (i == f.size()) {
        c = -1;
      } else if (j == g.size()) {
        c = 1;
      } else {
        c = order_.compare(f.mons[i], qm);
      }
      if (c > 0) {
        out.mons.push_back(f.mons[i]);
        if (scale) {
          mpz_class v = f.coefs[i] * a;
          field_.reduce_integer(v);
          out.coefs.push_back(std::move(v));
        } else {
          out.coefs.push_back(std::move(f.coefs[i]));
        }
        ++i;
      } else if (c < 0) {
        mpz_class v = -(b * g.coefs[j]);
        field_.reduce_integer(v);
        if (v != 0) {
          out.mons.push_back(qm);
          out.coefs.push_back(std::move(v));
        }
        ++j;
        have_q = false;
      } else {
        mpz_class v = scale ? mpz_class(f.coefs[i] * a) : mpz_class(f.coefs[i]);
        mpz_submul(v.get_mpz_t(), b.get_mpz_t(), g.coefs[j].get_mpz_t());
        field_.reduce_integer(v);
        if (v != 0) {
          out.mons.push_back(qm);
          out.coefs.push_back(std::move(v));
        }
        ++i;
        ++j;
        have_q = false;
      }
    }
    out.sugar = std::max(f.sugar, g.sugar + q.degree());
    f = std::move(out);
  }

  void erase_term(WPoly& f, std::size_t pos) const {
    f.mons.erase(f.mons.begin() + static_cast<std::ptrdiff_t>(pos));
    f.coefs.erase(f.coefs.begin() + static_cast<std::ptrdiff_t>(pos));
  }

  // Full reduction of the terms at positions >= start.
  void reduce(WPoly& f, const Reducers& reducers, std::size_t start = 0) const {
    std::size_t pos = start;
    std::size_t steps = 0;
    while (pos < f.size()) {
      const WPoly* g = reducers.find(f.mons[pos]);
      if (g == nullptr) {
        ++pos;
        continue;
      }
      if (g->size() == 1) {
        erase_term(f, pos);
        continue;
      }
      const Monomial q = f.mons[pos].quotient(g->lm());
      if (rational()) {
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), f.coefs[pos].get_mpz_t(), g->coefs.front().get_mpz_t());
        mpz_class a = g->coefs.front() / c;
        mpz_class b = f.coefs[pos] / c;
        if (a < 0) {
          a = -a;
          b = -b;
        }
        sub_mul(f, a, b, q, *g);
        if (++steps % 24 == 0) normalize_keep_sign(f);
      } else {
        const mpz_class b = f.coefs[pos];
        sub_mul(f, mpz_class(1), b, q, *g);
      }
    }
    if (start == 0) {
      normalize(f);
    } else {
      normalize_keep_sign(f);
    }
  }

  WPoly spoly(const WPoly& f, const WPoly& g, const Monomial& l) const {
    WPoly s;
    const Monomial qf = l.quotient(f.lm());
    const Monomial qg = l.quotient(g.lm());
    // s = (lc g / c) * qf * f - (lc f / c) * qg * g, leading terms cancel.
    s.mons.reserve(f.size() - 1);
    s.coefs.reserve(f.size() - 1);
    mpz_class a = 1, b = 1;
    if (rational()) {
      mpz_class c;
      mpz_gcd(c.get_mpz_t(), f.coefs.front().get_mpz_t(), g.coefs.front().get_mpz_t());
      a = g.coefs.front() / c;
      b = f.coefs.front() / c;
    }
    for (std::size_t i = 1; i < f.size(); ++i) {
      s.mons.push_back(f.mons[i] * qf);
      mpz_class v = f.coefs[i] * a;
      field_.reduce_integer(v);
      s.coefs.push_back(std::move(v));
    }
    s.sugar = f.sugar + qf.degree();
    WPoly gt;
    gt.mons.assign(g.mons.begin() + 1, g.mons.end());
    gt.coefs.assign(g.coefs.begin() + 1, g.coefs.end());
    gt.sugar = g.sugar;
    if (!gt.empty()) sub_mul(s, mpz_class(1), b, qg, gt);
    s.sugar = std::max(s.sugar, g.sugar + qg.degree());
    return s;
  }

 private:
  void normalize_keep_sign(WPoly& w) const {
    if (w.empty() || !rational()) return;
    mpz_class g = 0;
    for (const auto& c : w.coefs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& c : w.coefs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  Field field_;
  MonomialOrder order_;
};

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  Monomial lcm;
  unsigned sugar;
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    const int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Buchberger {
 public:
  explicit Buchberger(const Engine& engine)
      : engine_(engine), pairs_(PairLess{&engine.order()}) {}

  // Returns false if the ideal is the unit ideal.
  bool run(std::vector<WPoly> inputs, GroebnerStats* stats) {
    const auto& order = engine_.order();
    std::sort(inputs.begin(), inputs.end(), [&](const WPoly& a, const WPoly& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return order.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& f : inputs) {
      engine_.reduce(f, reducers_);
      if (f.empty()) continue;
      if (f.lm().is_one()) return false;
      insert(std::move(f));
    }
    while (!pairs_.empty()) {
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const WPoly& f = basis_[p.i];
      const WPoly& g = basis_[p.j];
      if (f.size() == 1 && g.size() == 1) continue;
      WPoly s = engine_.spoly(f, g, p.lcm);
      s.sugar = p.sugar;
      ++pairs_reduced_;
      engine_.reduce(s, reducers_);
      if (s.empty()) {
        ++zero_reductions_;
        continue;
      }
      if (s.lm().is_one()) return false;
      insert(std::move(s));
    }
    if (stats != nullptr) {
      stats->pairs_created = pairs_created_;
      stats->pairs_reduced = pairs_reduced_;
      stats->zero_reductions = zero_reductions_;
    }
    return true;
  }

  // Auto-reduced active elements.
  std::vector<WPoly> reduced_basis() {
    std::vector<WPoly> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      WPoly g = basis_[k];
      engine_.reduce(g, reducers_, 1);
      out.push_back(std::move(g));
    }
    const auto& order = engine_.order();
    std::sort(out.begin(), out.end(),
              [&](const WPoly& a, const WPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
    return out;
  }

 private:
  Pair make_pair(std::uint32_t i, std::uint32_t j) const {
    const WPoly& f = basis_[i];
    const WPoly& g = basis_[j];
    Pair p{i, j, lcm(f.lm(), g.lm()), 0};
    p.sugar = std::max(f.sugar + p.lcm.degree() - f.lm().degree(),
                       g.sugar + p.lcm.degree() - g.lm().degree());
    return p;
  }

  void insert(WPoly h) {
    basis_.reserve(std::max<std::size_t>(basis_.capacity(), 64));
    const auto hi = static_cast<std::uint32_t>(basis_.size());
    // Pointers into basis_ are held by reducers_: keep storage stable.
    if (basis_.size() == basis_.capacity()) {
      std::vector<WPoly> grown;
      grown.reserve(basis_.capacity() * 2);
      for (auto& b : basis_) grown.push_back(std::move(b));
      basis_.swap(grown);
      rebuild_reducers();
    }
    basis_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial lh = basis_[hi].lm();

    // Gebauer-Moeller update.
    std::vector<Pair> candidates;
    for (std::uint32_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back(make_pair(hi, g));
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = lh.coprime(basis_[p.j].lm());
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < candidates.size() && keep; ++m) {
          if (candidates[m].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t m = 0; m < kept.size() && keep; ++m) {
          if (kept[m].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && lcm(basis_[p.i].lm(), lh) != p.lcm &&
          lcm(lh, basis_[p.j].lm()) != p.lcm) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& p : kept) {
      if (lh.coprime(basis_[p.j].lm())) continue;
      pairs_.insert(p);
      ++pairs_created_;
    }
    for (std::uint32_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].lm())) {
        active_[g] = false;
        reducers_.remove(&basis_[g]);
      }
    }
    active_[hi] = true;
    reducers_.add(&basis_[hi]);
  }

  void rebuild_reducers() {
    reducers_ = Reducers{};
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) reducers_.add(&basis_[k]);
    }
  }

  const Engine& engine_;
  std::vector<WPoly> basis_;
  std::vector<bool> active_;
  Reducers reducers_;
  std::set<Pair, PairLess> pairs_;
  std::size_t pairs_created_ = 0;
  std::size_t pairs_reduced_ = 0;
  std::size_t zero_reductions_ = 0;
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const RingRef& ring, std::span<const Polynomial> gens,
                                               GroebnerStats* stats) {
  Engine engine(ring->field(), ring->order());
  std::vector<WPoly> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    if (!g.ring()->same_variables(*ring)) throw RingMismatch("generator from a different ring");
    if (g.is_zero()) continue;
    inputs.push_back(engine.from_poly(g.ring()->order() == ring->order() ? g : g.in_ring(ring)));
  }
  if (inputs.empty()) return {};
  Buchberger bb(engine);
  if (!bb.run(std::move(inputs), stats)) {
    if (stats != nullptr) stats->basis_size = 1;
    return {Polynomial::constant(ring, 1)};
  }
  std::vector<Polynomial> out;
  for (const auto& w : bb.reduced_basis()) out.push_back(engine.to_poly(w, ring));
  if (stats != nullptr) stats->basis_size = out.size();
  return out;
}

std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> gens,
                                               const MonomialOrder& order) {
  if (gens.empty()) return {};
  const RingRef ring = with_order(gens.front().ring(), order);
  return reduced_groebner_basis(ring, gens);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  const auto& ring = f.ring();
  const auto& field = ring->field();
  const auto& order = ring->order();
  std::vector<const Polynomial*> divisors;
  for (const auto& b : basis) {
    check_same_ring(f, b);
    if (b.is_zero()) throw std::invalid_argument("normal_form: zero basis element");
    divisors.push_back(&b);
  }
  std::vector<Term> terms = f.terms();
  std::size_t pos = 0;
  while (pos < terms.size()) {
    const Polynomial* g = nullptr;
    for (const auto* d : divisors) {
      if (d->leading_monomial().divides(terms[pos].mono)) {
        g = d;
        break;
      }
    }
    if (g == nullptr) {
      ++pos;
      continue;
    }
    const Monomial q = terms[pos].mono.quotient(g->leading_monomial());
    const Scalar c = field.div(terms[pos].coef, g->leading_coefficient());
    // terms <- terms - c*q*g, merging from pos.
    std::vector<Term> out(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(pos));
    std::size_t i = pos, j = 0;
    const auto& gt = g->terms();
    while (i < terms.size() || j < gt.size()) {
      int cmp;
      Monomial qm;
      if (j < gt.size()) qm = gt[j].mono * q;
      if (i == terms.size()) {
        cmp = -1;
      } else if (j == gt.size()) {
        cmp = 1;
      } else {
        cmp = order.compare(terms[i].mono, qm);
      }
      if (cmp > 0) {
        out.push_back(std::move(terms[i++]));
      } else if (cmp < 0) {
        out.push_back({field.neg(field.mul(c, gt[j].coef)), qm});
        ++j;
      } else {
        Scalar v = field.sub(terms[i].coef, field.mul(c, gt[j].coef));
        if (v != 0) out.push_back({std::move(v), qm});
        ++i;
        ++j;
      }
    }
    terms = std::move(out);
  }
  return PolyBuilder::from_sorted(ring, std::move(terms));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  if (f.ring()->order() == order) return normal_form(f, basis);
  const RingRef r = with_order(f.ring(), order);
  std::vector<Polynomial> b;
  for (const auto& p : basis) b.push_back(p.in_ring(r));
  return normal_form(f.in_ring(r), b).in_ring(f.ring());
}

bool reduces_to_zero(const Polynomial& f, std::span<const Polynomial> basis) {
  if (f.is_zero()) return true;
  Engine engine(f.ring()->field(), f.ring()->order());
  std::vector<WPoly> store;
  store.reserve(basis.size());
  for (const auto& b : basis) {
    check_same_ring(f, b);
    if (!b.is_zero()) store.push_back(engine.from_poly(b));
  }
  Reducers reducers;
  for (const auto& w : store) reducers.add(&w);
  WPoly w = engine.from_poly(f);
  engine.reduce(w, reducers);
  return w.empty();
}

bool exact_divide(const Polynomial& f, const Polynomial& g, Polynomial& quotient) {
  check_same_ring(f, g);
  if (g.is_zero()) throw std::invalid_argument("exact_divide by zero");
  const auto& ring = f.ring();
  const auto& field = ring->field();
  Polynomial rem = f;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms().front();
    if (!g.leading_monomial().divides(lt.mono)) return false;
    const Monomial m = lt.mono.quotient(g.leading_monomial());
    const Scalar c = field.div(lt.coef, g.leading_coefficient());
    q.push_back({c, m});
    rem = rem - g.times_monomial(m, c);
  }
  quotient = Polynomial(ring, std::move(q));
  return true;
}

}  // namespace rednum
