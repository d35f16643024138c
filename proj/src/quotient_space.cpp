#include "rednum/quotient_space.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "rednum/groebner.hpp"

namespace rednum {

namespace {

// Sorts by index, merges duplicates, drops zeros.
void canonicalize(SparseVec& v, const Field& field) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Scalar c = std::move(v[i].second);
    while (j < v.size() && v[j].first == v[i].first) {
      c = field.add(c, v[j].second);
      ++j;
    }
    if (c != 0) {
      v[out].first = v[i].first;
      v[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

void scale(SparseVec& v, const Scalar& c, const Field& field) {
  for (auto& e : v) e.second = field.mul(e.second, c);
}

constexpr std::uint64_t kRankPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kRankPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

using ModVec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

// Lower bound on the rank: the rank of the reduction mod kRankPrime, or
// nullopt when a denominator vanishes there.
std::optional<std::size_t> modular_rank(const std::vector<SparseVec>& rows, std::size_t target) {
  const mpz_class p(std::to_string(kRankPrime));
  std::map<std::uint32_t, ModVec> echelon;
  mpz_class r;
  for (const auto& row : rows) {
    ModVec v;
    v.reserve(row.size());
    for (const auto& [idx, c] : row) {
      mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), p.get_mpz_t());
      const std::uint64_t num = mpz_get_ui(r.get_mpz_t());
      mpz_fdiv_r(r.get_mpz_t(), c.get_den_mpz_t(), p.get_mpz_t());
      const std::uint64_t den = mpz_get_ui(r.get_mpz_t());
      if (den == 0) return std::nullopt;
      const std::uint64_t x = mulmod(num, powmod(den, kRankPrime - 2));
      if (x != 0) v.emplace_back(idx, x);
    }
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = echelon.find(v[pos].first);
      if (it == echelon.end()) {
        ++pos;
        continue;
      }
      const std::uint64_t c = kRankPrime - v[pos].second;
      const ModVec& b = it->second;
      ModVec out;
      out.reserve(v.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < b.size()) {
        if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
          out.push_back(v[i++]);
        } else if (i == v.size() || b[j].first < v[i].first) {
          out.emplace_back(b[j].first, mulmod(c, b[j].second));
          ++j;
        } else {
          const std::uint64_t s = (v[i].second + mulmod(c, b[j].second)) % kRankPrime;
          if (s != 0) out.emplace_back(v[i].first, s);
          ++i;
          ++j;
        }
      }
      v = std::move(out);
    }
    if (v.empty()) continue;
    const std::uint64_t inv = powmod(v.front().second, kRankPrime - 2);
    for (auto& e : v) e.second = mulmod(e.second, inv);
    const auto pivot = v.front().first;
    echelon.emplace(pivot, std::move(v));
    if (echelon.size() >= target) break;
  }
  return echelon.size();
}

}  // namespace

bool rank_reaches(const std::vector<SparseVec>& rows, std::size_t target, const Field& field) {
  if (target == 0) return true;
  if (field.is_rational()) {
    const auto lower = modular_rank(rows, target);
    if (lower && *lower >= target) return true;
  }
  EchelonSpace span(field);
  for (const auto& row : rows) {
    span.insert(row);
    if (span.rank() >= target) return true;
  }
  return false;
}

bool rank_reaches_modular(const std::vector<SparseVec>& rows, std::size_t target, const Field& field) {
  if (target == 0) return true;
  if (field.is_rational()) {
    if (const auto lower = modular_rank(rows, target)) return *lower >= target;
  }
  return rank_reaches(rows, target, field);
}

void axpy(SparseVec& a, const Scalar& c, const SparseVec& b, const Field& field) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, field.mul(c, b[j].second));
      ++j;
    } else {
      Scalar s = field.add(a[i].second, field.mul(c, b[j].second));
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

StandardBasis::StandardBasis(RingRef ring, std::vector<Polynomial> reduced_gb)
    : ring_(std::move(ring)), gb_(std::move(reduced_gb)) {
  std::vector<Monomial> lms;
  lms.reserve(gb_.size());
  for (const auto& g : gb_) {
    lms.push_back(g.leading_monomial());
    if (!g.is_monomial()) monomial_ = false;
  }
  if (lms.size() == 1 && lms[0].is_one()) {
    // Unit ideal: the zero algebra.
    return;
  }
  mons_ = standard_monomials(lms, ring_->nvars());
  const auto& order = ring_->order();
  std::sort(mons_.begin(), mons_.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  index_.reserve(mons_.size() * 2);
  for (std::size_t i = 0; i < mons_.size(); ++i) index_.emplace(mons_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> StandardBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Polynomial* StandardBasis::divisor_of(const Monomial& u) const {
  for (const auto& g : gb_) {
    if (g.leading_monomial().divides(u)) return &g;
  }
  return nullptr;
}

const SparseVec& StandardBasis::reduce_monomial(const Monomial& u) {
  auto hit = memo_.find(u);
  if (hit != memo_.end()) return hit->second;
  SparseVec v;
  if (auto idx = index_of(u)) {
    v.emplace_back(*idx, Scalar(1));
  } else if (!monomial_) {
    const Polynomial* g = divisor_of(u);
    if (g == nullptr) throw std::logic_error("standard basis: monomial outside the staircase has no divisor");
    if (g->leading_monomial() == u) {
      const auto& field = ring_->field();
      const Scalar inv = field.inv(g->leading_coefficient());
      for (std::size_t k = 1; k < g->size(); ++k) {
        const auto& t = g->terms()[k];
        auto idx = index_of(t.mono);
        if (!idx) throw std::logic_error("standard basis: Groebner basis is not reduced");
        v.emplace_back(*idx, field.neg(field.mul(t.coef, inv)));
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    } else {
      const Monomial q = u.quotient(g->leading_monomial());
      std::size_t j = 0;
      while (q[j] == 0) ++j;
      const Monomial xj = Monomial::variable(j);
      SparseVec base = reduce_monomial(u.quotient(xj));
      v = multiply(base, xj);
    }
  }
  return memo_.emplace(u, std::move(v)).first->second;
}

SparseVec StandardBasis::multiply(const SparseVec& v, const Monomial& m) {
  const auto& field = ring_->field();
  SparseVec acc;
  for (const auto& [idx, c] : v) {
    const Monomial prod = mons_[idx] * m;
    const SparseVec& nf = reduce_monomial(prod);
    for (const auto& [k, d] : nf) acc.emplace_back(k, field.mul(c, d));
  }
  canonicalize(acc, field);
  return acc;
}

SparseVec StandardBasis::multiply(const SparseVec& v, const Polynomial& p) {
  const auto& field = ring_->field();
  SparseVec acc;
  for (const auto& t : p.terms()) {
    for (const auto& [idx, c] : v) {
      const SparseVec& nf = reduce_monomial(mons_[idx] * t.mono);
      const Scalar cc = field.mul(c, t.coef);
      for (const auto& [k, d] : nf) acc.emplace_back(k, field.mul(cc, d));
    }
  }
  canonicalize(acc, field);
  return acc;
}

SparseVec StandardBasis::reduce(const Polynomial& f) {
  const auto& field = ring_->field();
  SparseVec acc;
  for (const auto& t : f.terms()) {
    const SparseVec& nf = reduce_monomial(t.mono);
    for (const auto& [k, d] : nf) acc.emplace_back(k, field.mul(t.coef, d));
  }
  canonicalize(acc, field);
  return acc;
}

Polynomial StandardBasis::to_polynomial(const SparseVec& v) const {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [idx, c] : v) terms.push_back({c, mons_[idx]});
  return PolyBuilder::from_sorted(ring_, std::move(terms));
}

void EchelonSpace::reduce(SparseVec& v) const {
  std::size_t p = 0;
  while (p < v.size()) {
    auto it = rows_.find(v[p].first);
    if (it == rows_.end()) {
      ++p;
      continue;
    }
    // Entries before p lie below the row's pivot and are untouched.
    const Scalar c = field_.neg(v[p].second);
    axpy(v, c, it->second, field_);
  }
}

bool EchelonSpace::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  scale(v, field_.inv(v.front().second), field_);
  const std::uint32_t pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

void EchelonSpace::back_substitute() {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    std::size_t p = 1;
    while (p < row.size()) {
      auto other = rows_.find(row[p].first);
      if (other == rows_.end()) {
        ++p;
        continue;
      }
      const Scalar c = field_.neg(row[p].second);
      axpy(row, c, other->second, field_);
    }
  }
}

EchelonSpace ideal_closure(StandardBasis& quotient, const std::vector<SparseVec>& gens) {
  const auto& field = quotient.field();
  const std::size_t n = quotient.ring()->nvars();
  EchelonSpace w(field);
  std::deque<SparseVec> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    w.reduce(v);
    if (v.empty()) continue;
    scale(v, field.inv(v.front().second), field);
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec prod = quotient.multiply(v, Monomial::variable(k));
      if (!prod.empty()) queue.push_back(std::move(prod));
    }
    w.insert(std::move(v));
  }
  return w;
}

std::vector<Polynomial> groebner_from_subspace(const StandardBasis& quotient, EchelonSpace& w) {
  const auto& ring = quotient.ring();
  const auto& order = ring->order();
  w.back_substitute();
  std::vector<Monomial> candidates;
  for (const auto& g : quotient.groebner_basis()) candidates.push_back(g.leading_monomial());
  for (const auto& [pivot, row] : w.rows()) candidates.push_back(quotient.monomials()[pivot]);
  const auto minimal = minimize_monomials(std::move(candidates), order);
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const auto& u : minimal) {
    if (auto idx = quotient.index_of(u)) {
      out.push_back(quotient.to_polynomial(w.rows().at(*idx)));
      continue;
    }
    const Polynomial* g = nullptr;
    for (const auto& p : quotient.groebner_basis()) {
      if (p.leading_monomial() == u) {
        g = &p;
        break;
      }
    }
    if (g == nullptr) throw std::logic_error("groebner_from_subspace: missing basis element");
    SparseVec tail;
    const Scalar inv = ring->field().inv(g->leading_coefficient());
    for (std::size_t k = 1; k < g->size(); ++k) {
      const auto& t = g->terms()[k];
      tail.emplace_back(*quotient.index_of(t.mono), ring->field().mul(t.coef, inv));
    }
    std::sort(tail.begin(), tail.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    w.reduce(tail);
    out.push_back(Polynomial::monomial(ring, u) + quotient.to_polynomial(tail));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

std::vector<Polynomial> colon_by_linear_algebra(StandardBasis& a, StandardBasis& lower_bound,
                                                const std::vector<Polynomial>& b_gens) {
  const auto& field = a.field();
  const auto dim_a = static_cast<std::uint32_t>(a.dimension());
  for (const auto& c : lower_bound.groebner_basis()) {
    for (const auto& b : b_gens) {
      if (!a.reduce(c * b).empty()) throw std::logic_error("colon: lower bound times divisor is not inside the ideal");
    }
  }

  struct Row {
    SparseVec image;
    SparseVec combo;
  };
  std::map<std::uint32_t, Row> echelon;
  EchelonSpace kernel(field);
  const auto& domain = lower_bound.monomials();
  // Smallest monomials first: their images are the most reduced.
  for (std::size_t ii = domain.size(); ii-- > 0;) {
    const auto i = static_cast<std::uint32_t>(ii);
    const auto idx_a = a.index_of(domain[i]);
    if (!idx_a) throw std::logic_error("colon: lower bound is not contained in the colon");
    const SparseVec unit{{*idx_a, Scalar(1)}};
    Row row;
    for (std::size_t k = 0; k < b_gens.size(); ++k) {
      SparseVec part = a.multiply(unit, b_gens[k]);
      const auto offset = static_cast<std::uint32_t>(k) * dim_a;
      for (auto& e : part) row.image.emplace_back(e.first + offset, std::move(e.second));
    }
    row.combo.emplace_back(i, Scalar(1));
    std::size_t p = 0;
    while (p < row.image.size()) {
      auto it = echelon.find(row.image[p].first);
      if (it == echelon.end()) {
        ++p;
        continue;
      }
      const Scalar c = field.neg(row.image[p].second);
      axpy(row.image, c, it->second.image, field);
      axpy(row.combo, c, it->second.combo, field);
    }
    if (row.image.empty()) {
      kernel.insert(std::move(row.combo));
    } else {
      const Scalar inv = field.inv(row.image.front().second);
      scale(row.image, inv, field);
      scale(row.combo, inv, field);
      const auto pivot = row.image.front().first;
      echelon.emplace(pivot, std::move(row));
    }
  }
  return groebner_from_subspace(lower_bound, kernel);
}

}  // namespace rednum
