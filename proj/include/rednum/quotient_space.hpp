#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rednum/polynomial.hpp"

namespace rednum {

/// Sparse coordinates over a standard-monomial basis, sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// The finite-dimensional algebra k[x]/A for an ideal A given by its reduced
/// Groebner basis, with the standard monomials as basis. Index 0 is the
/// largest standard monomial in the ring order, so a vector's first entry is
/// its leading term.
class StandardBasis {
 public:
  /// Throws std::domain_error when A has infinitely many standard monomials.
  StandardBasis(RingRef ring, std::vector<Polynomial> reduced_gb);

  const RingRef& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Polynomial>& groebner_basis() const { return gb_; }
  std::size_t dimension() const { return mons_.size(); }
  const std::vector<Monomial>& monomials() const { return mons_; }
  std::optional<std::uint32_t> index_of(const Monomial& m) const;

  /// Normal forms as coordinate vectors. Memoized, so not const.
  const SparseVec& reduce_monomial(const Monomial& u);
  SparseVec reduce(const Polynomial& f);
  SparseVec multiply(const SparseVec& v, const Monomial& m);
  SparseVec multiply(const SparseVec& v, const Polynomial& p);

  Polynomial to_polynomial(const SparseVec& v) const;

 private:
  const Polynomial* divisor_of(const Monomial& u) const;

  RingRef ring_;
  std::vector<Polynomial> gb_;
  std::vector<Monomial> mons_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  std::unordered_map<Monomial, SparseVec, MonomialHash> memo_;
  bool monomial_ = true;
  SparseVec empty_;
};

/// a <- a + c*b over `field`.
void axpy(SparseVec& a, const Scalar& c, const SparseVec& b, const Field& field);

/// Row-echelon subspace. Each row is monic at its pivot, which is its
/// smallest index.
class EchelonSpace {
 public:
  explicit EchelonSpace(Field field) : field_(std::move(field)) {}

  /// Eliminates every pivot position from v.
  void reduce(SparseVec& v) const;
  /// Adds v to the span; returns false when it was already dependent.
  bool insert(SparseVec v);
  bool contains(SparseVec v) const {
    reduce(v);
    return v.empty();
  }
  std::size_t rank() const { return rows_.size(); }
  /// Rows keyed by pivot index.
  const std::map<std::uint32_t, SparseVec>& rows() const { return rows_; }
  /// Clears all non-pivot-free entries so the rows form the reduced echelon form.
  void back_substitute();

 private:
  Field field_;
  std::map<std::uint32_t, SparseVec> rows_;
};

/// Whether `rows` span a space of dimension `target` (the ambient
/// dimension or less). Decided exactly: an elimination modulo a large prime
/// settles the full-rank case, otherwise the rank is recomputed in `field`.
bool rank_reaches(const std::vector<SparseVec>& rows, std::size_t target, const Field& field);

/// The modular half of rank_reaches alone. `true` is exact; `false` can be
/// wrong for an unlucky prime (probability about 2^-61 per minor).
bool rank_reaches_modular(const std::vector<SparseVec>& rows, std::size_t target, const Field& field);

/// Smallest subspace of k[x]/A containing `gens` and closed under
/// multiplication by the variables: the image of the ideal they generate.
EchelonSpace ideal_closure(StandardBasis& quotient, const std::vector<SparseVec>& gens);

/// Reduced Groebner basis of the ideal K with A <= K and K/A = span(W), where
/// A is `quotient`'s ideal. W must be an ideal image (closed under variables).
std::vector<Polynomial> groebner_from_subspace(const StandardBasis& quotient, EchelonSpace& w);

/// (A : B) for A with finite quotient, given a lower bound C with C*B <= A
/// (C = A is always valid). Returns the reduced Groebner basis.
std::vector<Polynomial> colon_by_linear_algebra(StandardBasis& a, StandardBasis& lower_bound,
                                                const std::vector<Polynomial>& b_gens);

}  // namespace rednum
