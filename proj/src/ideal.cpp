#include "rednum/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <unordered_set>

#include "rednum/groebner.hpp"

namespace rednum {

namespace {

std::atomic<unsigned> g_power_cap{40};

bool all_monomials(const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero() || p.is_monomial(); });
}

std::vector<Polynomial> as_polynomials(const RingRef& ring, const std::vector<Monomial>& mons) {
  std::vector<Polynomial> out;
  out.reserve(mons.size());
  for (const auto& m : mons) out.push_back(Polynomial::monomial(ring, m));
  return out;
}

void check_same_presentation(const Ideal& a, const Ideal& b) {
  if (a.ring() == b.ring()) return;
  if (!(*a.ambient() == *b.ambient()) || a.ring()->relations() != b.ring()->relations()) {
    throw RingMismatch("ideals belong to different rings");
  }
}

/// Maps f into `target`, whose variables are a subset of f's ring by name.
Polynomial contract(const Polynomial& f, const RingRef& target) {
  const auto& src = f.ring()->variables();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src[i]);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] < 0) throw std::logic_error("contract: eliminated variable still present");
      m.set(static_cast<std::size_t>(map[i]), t.mono[i]);
    }
    terms.push_back({t.coef, m});
  }
  return Polynomial(target, std::move(terms));
}

std::string fresh_name(const RingRef& ring) {
  std::string name = "_t";
  while (ring->index_of(name) >= 0) name += "_";
  return name;
}

/// Generators of A ∩ B through t*A + (1-t)*B with t eliminated.
std::vector<Polynomial> intersect_by_elimination(const RingRef& ring, const std::vector<Polynomial>& a,
                                                 const std::vector<Polynomial>& b) {
  std::vector<std::string> vars{fresh_name(ring)};
  for (const auto& v : ring->variables()) vars.push_back(v);
  const RingRef big = make_ring(ring->field(), vars, MonomialOrder::elimination(1));
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> input;
  for (const auto& f : a) input.push_back(t * f.embedded(big));
  for (const auto& g : b) input.push_back(one_minus_t * g.embedded(big));
  std::vector<Polynomial> out;
  for (const auto& g : reduced_groebner_basis(big, input)) {
    if (g.leading_monomial()[0] == 0) out.push_back(contract(g, ring));
  }
  return out;
}

std::vector<Monomial> monomial_intersection(const std::vector<Monomial>& a, const std::vector<Monomial>& b,
                                            const MonomialOrder& order) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(lcm(x, y));
  }
  return minimize_monomials(std::move(out), order);
}

/// Staircase complement: minimal monomials outside the order ideal `inside`.
std::vector<Monomial> minimal_outside(const std::unordered_set<Monomial, MonomialHash>& inside, std::size_t nvars,
                                      const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (inside.empty()) return {Monomial{}};
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& s : inside) {
    for (std::size_t i = 0; i < nvars; ++i) {
      const Monomial u = s * Monomial::variable(i);
      if (inside.count(u) || !seen.insert(u).second) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < nvars && minimal; ++k) {
        if (u[k] > 0 && !inside.count(u.quotient(Monomial::variable(k)))) minimal = false;
      }
      if (minimal) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return order.compare(x, y) < 0; });
  return out;
}

std::vector<Monomial> monomial_colon(const Ideal& a, const Ideal& b) {
  const auto& order = a.ambient()->order();
  const std::size_t n = a.ambient()->nvars();
  const auto& agens = a.monomial_basis();
  const auto& bgens = b.monomial_basis();
  if (has_pure_powers(agens, n)) {
    const auto staircase = standard_monomials(agens, n);
    const std::unordered_set<Monomial, MonomialHash> std_a(staircase.begin(), staircase.end());
    std::unordered_set<Monomial, MonomialHash> inside;
    for (const auto& s : staircase) {
      for (const auto& g : bgens) {
        if (std_a.count(s * g)) {
          inside.insert(s);
          break;
        }
      }
    }
    return minimal_outside(inside, n, order);
  }
  std::vector<Monomial> result;
  bool first = true;
  for (const auto& g : bgens) {
    std::vector<Monomial> part;
    for (const auto& x : agens) part.push_back(x.quotient(gcd(x, g)));
    part = minimize_monomials(std::move(part), order);
    result = first ? part : monomial_intersection(result, part, order);
    first = false;
  }
  return result;
}

}  // namespace

unsigned power_cap() { return g_power_cap.load(); }
void set_power_cap(unsigned cap) { g_power_cap.store(cap); }

// ---------------------------------------------------------------------------

struct RingPresentation::Cache {
  std::mutex mu;
  std::optional<std::vector<Polynomial>> basis;
  std::optional<unsigned> dimension;
};

RingPresentation::RingPresentation(RingRef ambient, std::vector<Polynomial> relations)
    : ambient_(std::move(ambient)), cache_(std::make_shared<Cache>()) {
  for (auto& r : relations) {
    if (!r.ring()->same_variables(*ambient_)) throw RingMismatch("relation from a different ring");
    if (r.is_zero()) continue;
    if (r.constant_term() != 0) {
      throw std::invalid_argument("relation " + r.to_string() + " is not in the maximal ideal");
    }
    if (!r.is_monomial()) monomial_relations_ = false;
    relations_.push_back(r.in_ring(ambient_));
  }
}

const std::vector<Polynomial>& RingPresentation::relations_basis() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->basis) cache_->basis = reduced_groebner_basis(ambient_, relations_);
  return *cache_->basis;
}

std::optional<unsigned> RingPresentation::dimension() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->dimension;
}

void RingPresentation::set_dimension(unsigned d) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->dimension = d;
}

PresentationRef make_presentation(RingRef ambient, std::vector<Polynomial> relations) {
  return std::make_shared<const RingPresentation>(std::move(ambient), std::move(relations));
}

PresentationRef quotient_by_element(const PresentationRef& ring, const Polynomial& x) {
  if (x.is_zero()) return ring;
  if (x.constant_term() != 0) throw std::invalid_argument("quotient_by_element: element is a unit");
  auto rels = ring->relations();
  rels.push_back(x.in_ring(ring->ambient()));
  return make_presentation(ring->ambient(), std::move(rels));
}

// ---------------------------------------------------------------------------

struct Ideal::Cache {
  std::recursive_mutex mu;
  std::optional<std::vector<Polynomial>> basis;
  std::optional<std::vector<Monomial>> monomials;
  std::optional<std::vector<Polynomial>> compact;
  std::vector<Ideal> powers;  // powers[k] = I^(k+2)
  std::optional<Ideal> m_multiple;
  std::optional<std::size_t> length;
};

Ideal::Ideal(PresentationRef ring, std::vector<Polynomial> generators)
    : Ideal(std::move(ring), std::move(generators), false) {}

Ideal::Ideal(PresentationRef ring, std::vector<Polynomial> generators, bool from_basis)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring()->same_variables(*ring_->ambient())) throw RingMismatch("generator from a different ring");
    if (g.is_zero()) continue;
    gens_.push_back(g.in_ring(ring_->ambient()));
  }
  monomial_ = all_monomials(gens_) && ring_->has_monomial_relations();
  if (from_basis) cache_->basis = gens_;
}

Ideal Ideal::unit(const PresentationRef& ring) { return Ideal(ring, {Polynomial::constant(ring->ambient(), 1)}); }
Ideal Ideal::zero(const PresentationRef& ring) { return Ideal(ring, {}); }

Ideal Ideal::maximal(const PresentationRef& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring->ambient(), i));
  return Ideal(ring, std::move(vars));
}

Ideal Ideal::from_groebner(const PresentationRef& ring, std::vector<Polynomial> basis) {
  return Ideal(ring, std::move(basis), true);
}

const std::vector<Monomial>& Ideal::monomial_basis() const {
  if (!monomial_) throw std::logic_error("monomial_basis: not a monomial ideal");
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->monomials) {
    std::vector<Monomial> mons;
    for (const auto& g : gens_) mons.push_back(g.leading_monomial());
    for (const auto& r : ring_->relations()) mons.push_back(r.leading_monomial());
    cache_->monomials = minimize_monomials(std::move(mons), ring_->ambient()->order());
  }
  return *cache_->monomials;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->basis) {
    if (monomial_) {
      cache_->basis = as_polynomials(ambient(), monomial_basis());
    } else {
      std::vector<Polynomial> input = gens_;
      const auto& rel = ring_->relations_basis();
      input.insert(input.end(), rel.begin(), rel.end());
      cache_->basis = reduced_groebner_basis(ambient(), input);
    }
  }
  return *cache_->basis;
}

bool Ideal::groebner_basis_known() const {
  if (monomial_) return true;
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  return cache_->basis.has_value();
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const {
  // Generators in a suffice; a Groebner basis of the ideal can be costly.
  if (groebner_basis_known()) return groebner_basis() == ring_->relations_basis();
  const auto& rel = ring_->relations_basis();
  return std::all_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) { return reduces_to_zero(g, rel); });
}

bool Ideal::is_m_primary() const {
  if (is_unit()) throw std::invalid_argument("is_m_primary: unit ideal");
  std::vector<Monomial> lms;
  for (const auto& g : groebner_basis()) lms.push_back(g.leading_monomial());
  return has_pure_powers(lms, ring_->nvars());
}

std::size_t Ideal::quotient_length() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->length) {
    if (is_unit()) {
      cache_->length = 0;
    } else {
      std::vector<Monomial> lms;
      for (const auto& g : groebner_basis()) lms.push_back(g.leading_monomial());
      if (!has_pure_powers(lms, ring_->nvars())) throw InfiniteLength("quotient has infinite length");
      cache_->length = standard_monomials(lms, ring_->nvars()).size();
    }
  }
  return *cache_->length;
}

unsigned Ideal::order_in_m() const {
  if (is_unit()) throw std::invalid_argument("order_in_m: unit ideal");
  if (is_zero()) throw std::invalid_argument("order_in_m: zero ideal");
  if (ring_->is_polynomial_ring()) {
    unsigned o = ~0u;
    for (const auto& g : gens_) o = std::min(o, g.low_degree());
    return o;
  }
  const Ideal m = maximal(ring_);
  unsigned n = 1;
  while (n < power_cap() && m.power(n + 1).contains(*this)) ++n;
  if (n >= power_cap()) throw CapExceeded("order_in_m: power cap reached", power_cap());
  return n;
}

Ideal Ideal::power(unsigned n) const {
  if (n == 0) return unit(ring_);
  if (n == 1) return *this;
  if (n > power_cap()) {
    throw CapExceeded("power " + std::to_string(n) + " exceeds the cap " + std::to_string(power_cap()), power_cap());
  }
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  while (cache_->powers.size() + 2 <= n) {
    const Ideal prev = cache_->powers.empty() ? *this : cache_->powers.back();
    cache_->powers.push_back(ideal_product(prev, *this));
  }
  return cache_->powers[n - 2];
}

Ideal Ideal::maximal_multiple() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->m_multiple) cache_->m_multiple = ideal_product(maximal(ring_), *this);
  return *cache_->m_multiple;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  const Polynomial g = f.in_ring(ambient());
  if (monomial_) {
    const auto& mons = monomial_basis();
    return std::all_of(g.terms().begin(), g.terms().end(),
                       [&](const Term& t) { return divisible_by_any(t.mono, mons); });
  }
  return reduces_to_zero(g, groebner_basis());
}

bool Ideal::contains(const Ideal& other) const {
  check_same_presentation(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& f) { return contains(f); });
}

StandardBasis Ideal::quotient_algebra() const { return StandardBasis(ambient(), groebner_basis()); }

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

const std::vector<Polynomial>& Ideal::product_generators() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->compact) {
    if (monomial_) {
      cache_->compact = as_polynomials(ambient(), monomial_basis());
    } else if (ring_->is_polynomial_ring()) {
      cache_->compact = groebner_basis();
    } else {
      const auto& rel = ring_->relations_basis();
      std::vector<Polynomial> kept;
      for (const auto& g : groebner_basis()) {
        if (!reduces_to_zero(g, rel)) kept.push_back(g);
      }
      cache_->compact = std::move(kept);
    }
  }
  return *cache_->compact;
}

// ---------------------------------------------------------------------------

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  if (a.is_monomial() && b.is_monomial()) {
    const auto& ma = a.monomial_basis();
    const auto& mb = b.monomial_basis();
    std::vector<Monomial> prods;
    prods.reserve(ma.size() * mb.size());
    for (const auto& x : ma) {
      for (const auto& y : mb) prods.push_back(x * y);
    }
    for (const auto& r : a.ring()->relations()) prods.push_back(r.leading_monomial());
    auto minimal = minimize_monomials(std::move(prods), a.ambient()->order());
    return Ideal::from_groebner(a.ring(), as_polynomials(a.ambient(), minimal));
  }
  const std::vector<Polynomial> ga = a.product_generators();
  const std::vector<Polynomial> gb = b.product_generators();
  std::vector<Polynomial> prods;
  prods.reserve(ga.size() * gb.size());
  for (const auto& x : ga) {
    for (const auto& y : gb) prods.push_back(x * y);
  }
  return Ideal(a.ring(), std::move(prods));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  if (b.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  if (a.is_monomial() && b.is_monomial()) {
    return Ideal::from_groebner(a.ring(), as_polynomials(a.ambient(), monomial_colon(a, b)));
  }
  if (!a.is_unit() && a.is_m_primary()) return ideal_colon(a, b, a);
  return ideal_colon_by_elimination(a, b);
}

Ideal ideal_colon(const Ideal& a, const Ideal& b, const Ideal& lower_bound) {
  check_same_presentation(a, b);
  check_same_presentation(a, lower_bound);
  if (b.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  if (a.is_monomial() && b.is_monomial()) {
    return Ideal::from_groebner(a.ring(), as_polynomials(a.ambient(), monomial_colon(a, b)));
  }
  if (a.is_unit()) return a;
  if (!a.is_m_primary()) throw std::invalid_argument("colon with a lower bound needs an m-primary ideal");
  StandardBasis qa = a.quotient_algebra();
  StandardBasis qc = lower_bound.quotient_algebra();
  // Any generating set works; avoid a Groebner basis of B when none exists.
  const std::vector<Polynomial> gens = b.groebner_basis_known() ? b.product_generators() : b.generators();
  return Ideal::from_groebner(a.ring(), colon_by_linear_algebra(qa, qc, gens));
}

Ideal ideal_colon_by_elimination(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  if (b.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  const auto& ring = a.ambient();
  const auto& abasis = a.groebner_basis();
  std::optional<std::vector<Polynomial>> acc;
  for (const auto& g : b.generators()) {
    if (a.contains(g)) continue;
    std::vector<Polynomial> part;
    for (const auto& h : intersect_by_elimination(ring, abasis, {g})) {
      Polynomial q;
      if (!exact_divide(h, g, q)) throw std::logic_error("colon: intersection element not divisible");
      part.push_back(q);
    }
    acc = acc ? intersect_by_elimination(ring, *acc, part) : reduced_groebner_basis(ring, part);
  }
  if (!acc) return Ideal::unit(a.ring());
  // The result contains a already (a <= A <= (A : g)), but keep the relations explicit.
  return Ideal(a.ring(), std::move(*acc));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  if (a.is_monomial() && b.is_monomial()) {
    return Ideal::from_groebner(
        a.ring(), as_polynomials(a.ambient(), monomial_intersection(a.monomial_basis(), b.monomial_basis(),
                                                                    a.ambient()->order())));
  }
  return Ideal(a.ring(), intersect_by_elimination(a.ambient(), a.groebner_basis(), b.groebner_basis()));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  if (a.is_monomial() && b.is_monomial()) return a.monomial_basis() == b.monomial_basis();
  return a.groebner_basis() == b.groebner_basis();
}

Ideal sum_with_floor(const Ideal& a, const Ideal& floor) {
  check_same_presentation(a, floor);
  if (a.is_monomial() && floor.is_monomial()) return ideal_sum(a, floor);
  StandardBasis q = floor.quotient_algebra();
  std::vector<SparseVec> gens;
  for (const auto& g : a.generators()) gens.push_back(q.reduce(g));
  EchelonSpace w = ideal_closure(q, gens);
  return Ideal::from_groebner(a.ring(), groebner_from_subspace(q, w));
}

std::size_t length_with_floor(const Ideal& a, const Ideal& floor) {
  check_same_presentation(a, floor);
  if (a.is_monomial() && floor.is_monomial()) return ideal_sum(a, floor).quotient_length();
  StandardBasis q = floor.quotient_algebra();
  std::vector<SparseVec> gens;
  for (const auto& g : a.generators()) gens.push_back(q.reduce(g));
  return q.dimension() - ideal_closure(q, gens).rank();
}

std::vector<Polynomial> generator_products(const Ideal& a, const Ideal& b) {
  check_same_presentation(a, b);
  const auto& ga = a.groebner_basis_known() ? a.product_generators() : a.generators();
  const auto& gb = b.groebner_basis_known() ? b.product_generators() : b.generators();
  std::vector<Polynomial> out;
  out.reserve(ga.size() * gb.size());
  for (const auto& x : ga) {
    for (const auto& y : gb) out.push_back(x * y);
  }
  return out;
}

bool reduction_step_holds(const Ideal& i, const Ideal& j, unsigned n, const std::vector<Polynomial>& modulo,
                          bool exact) {
  const auto decide = exact ? rank_reaches : rank_reaches_modular;
  check_same_presentation(i, j);
  const Ideal next = i.power(n + 1);
  const auto& field = i.ambient()->field();
  std::vector<Polynomial> base;
  if (n == 0) {
    base.push_back(Polynomial::constant(i.ambient(), 1));
  } else {
    base = i.power(n).product_generators();
  }
  if (modulo.empty() && i.is_monomial() && i.ring()->is_polynomial_ring()) {
    // I^{n+1}/m*I^{n+1} has the minimal monomial generators as a basis; a
    // product monomial that is not minimal lies in m*I^{n+1}.
    const auto& minimal = next.monomial_basis();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::size_t k = 0; k < minimal.size(); ++k) index.emplace(minimal[k], static_cast<std::uint32_t>(k));
    std::vector<SparseVec> rows;
    for (const auto& g : j.generators()) {
      for (const auto& b : base) {
        SparseVec v;
        const Monomial& bm = b.leading_monomial();
        for (const auto& t : g.terms()) {
          auto it = index.find(t.mono * bm);
          if (it != index.end()) v.emplace_back(it->second, t.coef);
        }
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (!v.empty()) rows.push_back(std::move(v));
      }
    }
    return decide(rows, minimal.size(), field);
  }
  const Ideal floor = next.maximal_multiple();
  StandardBasis q = floor.quotient_algebra();
  std::vector<SparseVec> rows;
  std::size_t target = q.dimension() - next.quotient_length();
  if (!modulo.empty()) {
    // Compare J*I^n + (x) with I^{n+1} + (x) inside k[x]/(m*I^{n+1}).
    std::vector<SparseVec> xs;
    for (const auto& x : modulo) xs.push_back(q.reduce(x.in_ring(i.ambient())));
    EchelonSpace w = ideal_closure(q, xs);
    std::vector<SparseVec> upper;
    for (const auto& g : next.product_generators()) upper.push_back(q.reduce(g));
    for (const auto& [pivot, row] : w.rows()) {
      rows.push_back(row);
      upper.push_back(row);
    }
    EchelonSpace big = ideal_closure(q, upper);
    target = big.rank();
  }
  for (const auto& g : j.generators()) {
    const SparseVec vg = q.reduce(g);
    for (const auto& b : base) {
      SparseVec v = q.multiply(vg, b);
      if (!v.empty()) rows.push_back(std::move(v));
    }
  }
  return decide(rows, target, field);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Polynomial random_combination(const Ideal& a, std::uint64_t seed, unsigned bound) {
  if (bound == 0) throw std::invalid_argument("random_combination: bound must be positive");
  const auto& gens = a.generators();
  if (gens.empty()) throw std::invalid_argument("random_combination: zero ideal");
  std::mt19937_64 rng(seed);
  const std::uint64_t width = 2ULL * bound + 1;
  for (;;) {
    Polynomial sum(a.ambient());
    bool nonzero = false;
    for (const auto& g : gens) {
      const long c = static_cast<long>(rng() % width) - static_cast<long>(bound);
      if (c == 0) continue;
      nonzero = true;
      sum = sum + g.scaled(Scalar(c));
    }
    if (nonzero && !sum.is_zero()) return sum;
  }
}

}  // namespace rednum
