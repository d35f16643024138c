#pragma once

#include <span>
#include <vector>

#include "rednum/polynomial.hpp"

namespace rednum {

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// Unique reduced Groebner basis of the ideal generated by `gens` in the
/// ring's order: monic, auto-reduced, sorted by increasing leading monomial.
/// Buchberger with the coprime and chain criteria (Gebauer-Moeller update)
/// and sugar-degree pair selection. The zero ideal yields an empty basis.
std::vector<Polynomial> reduced_groebner_basis(const RingRef& ring, std::span<const Polynomial> gens,
                                               GroebnerStats* stats = nullptr);

/// Same, computed in `order` (the result lives in with_order(ring, order)).
std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> gens,
                                               const MonomialOrder& order);

/// Multivariate division remainder of f by `basis` (in f's ring order): no
/// term of the result is divisible by a basis leading monomial and
/// f - result lies in the ideal of `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Remainder computed in another order; returned in f's ring.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// Zero test of the remainder (cheaper: fraction-free, no rescaling).
bool reduces_to_zero(const Polynomial& f, std::span<const Polynomial> basis);

/// Exact quotient f / g when g divides f, otherwise nullopt-like empty flag.
bool exact_divide(const Polynomial& f, const Polynomial& g, Polynomial& quotient);

}  // namespace rednum
