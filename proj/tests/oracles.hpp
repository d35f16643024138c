#pragma once

// Independent brute-force checks used by the tests. Nothing here calls the
// Groebner machinery: everything is dense linear algebra on truncated
// polynomial spaces or plain divisibility enumeration.

#include <map>
#include <random>
#include <vector>

#include "rednum/polynomial.hpp"

namespace oracle {

using rednum::Monomial;
using rednum::Polynomial;
using rednum::Scalar;

/// All monomials in `nvars` variables of total degree < bound.
inline std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d < bound; ++d) {
    auto layer = rednum::monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Row-reduced span of polynomials truncated below degree `bound`, i.e. a
/// subspace of k[x]/m^bound.
class TruncatedSpan {
 public:
  TruncatedSpan(std::size_t nvars, unsigned bound) : bound_(bound) {
    basis_ = monomials_below(nvars, bound);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].exponents()] = i;
  }

  std::vector<Scalar> vectorize(const Polynomial& f) const {
    std::vector<Scalar> v(basis_.size());
    for (const auto& t : f.terms()) {
      if (t.mono.degree() >= bound_) continue;
      v[index_.at(t.mono.exponents())] = t.coef;
    }
    return v;
  }

  // Reduces v against the stored rows; returns the first nonzero column or -1.
  long reduce(std::vector<Scalar>& v) const {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      const Scalar c = v[col];
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (row[k] != 0) v[k] -= c * row[k];
      }
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) return static_cast<long>(k);
    }
    return -1;
  }

  bool add(const Polynomial& f) {
    auto v = vectorize(f);
    const long piv = reduce(v);
    if (piv < 0) return false;
    const Scalar inv = 1 / v[static_cast<std::size_t>(piv)];
    for (auto& x : v) x *= inv;
    for (auto& [col, row] : rows_) {
      const Scalar c = row[static_cast<std::size_t>(piv)];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) row[k] -= c * v[k];
    }
    rows_.emplace(static_cast<std::size_t>(piv), std::move(v));
    return true;
  }

  bool contains(const Polynomial& f) const {
    auto v = vectorize(f);
    return reduce(v) < 0;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

 private:
  unsigned bound_;
  std::vector<Monomial> basis_;
  std::map<std::array<Monomial::Exponent, rednum::kMaxVars>, std::size_t> index_;
  std::map<std::size_t, std::vector<Scalar>> rows_;
};

/// Span of the ideal generated by `gens` inside k[x]/m^bound.
inline TruncatedSpan ideal_span(const std::vector<Polynomial>& gens, std::size_t nvars, unsigned bound) {
  TruncatedSpan span(nvars, bound);
  const auto& ring = gens.front().ring();
  for (const auto& u : monomials_below(nvars, bound)) {
    for (const auto& g : gens) {
      if (g.is_zero() || g.low_degree() + u.degree() >= bound) continue;
      span.add(g.times_monomial(u));
    }
  }
  (void)ring;
  return span;
}

/// dim_k k[x]/(gens + m^bound). Equals the local length of the ideal when
/// m^bound already lies in it.
inline std::size_t truncated_length(const std::vector<Polynomial>& gens, std::size_t nvars, unsigned bound) {
  const auto span = ideal_span(gens, nvars, bound);
  return span.ambient_dim() - span.rank();
}

/// Random m-primary monomial ideal: pure powers x_i^{a_i} plus extra mixed
/// monomials of degree <= max_deg.
inline std::vector<Monomial> random_monomial_ideal(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg,
                                                   unsigned extra) {
  std::vector<Monomial> gens;
  std::uniform_int_distribution<unsigned> pure(1, max_deg);
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(i, pure(rng)));
  std::uniform_int_distribution<unsigned> ex(0, max_deg);
  for (unsigned k = 0; k < extra; ++k) {
    Monomial m;
    unsigned left = max_deg;
    for (std::size_t i = 0; i < nvars; ++i) {
      const unsigned e = std::min(left, ex(rng) % (max_deg / 2 + 1));
      m.set(i, e);
      left -= e;
    }
    if (!m.is_one()) gens.push_back(m);
  }
  return gens;
}

}  // namespace oracle
