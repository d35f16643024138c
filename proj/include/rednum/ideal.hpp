#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rednum/polynomial.hpp"
#include "rednum/quotient_space.hpp"

namespace rednum {

/// A power index beyond the configured cap was requested.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, unsigned cap) : std::runtime_error(what), cap_(cap) {}
  unsigned cap() const { return cap_; }

 private:
  unsigned cap_;
};

/// Length of a non-m-primary quotient.
class InfiniteLength : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest power index ideals will build (default 40). Thread-safe.
unsigned power_cap();
void set_power_cap(unsigned cap);

/// R = k[x_1..x_n]/a localized at m = (x_1..x_n).
class RingPresentation {
 public:
  RingPresentation(RingRef ambient, std::vector<Polynomial> relations);

  const RingRef& ambient() const { return ambient_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Reduced Groebner basis of a (computed on first use).
  const std::vector<Polynomial>& relations_basis() const;
  bool is_polynomial_ring() const { return relations_.empty(); }
  bool has_monomial_relations() const { return monomial_relations_; }
  std::size_t nvars() const { return ambient_->nvars(); }

  /// Krull dimension once computed (or declared by the user).
  std::optional<unsigned> dimension() const;
  void set_dimension(unsigned d) const;

 private:
  struct Cache;
  RingRef ambient_;
  std::vector<Polynomial> relations_;
  bool monomial_relations_ = true;
  std::shared_ptr<Cache> cache_;
};

using PresentationRef = std::shared_ptr<const RingPresentation>;

PresentationRef make_presentation(RingRef ambient, std::vector<Polynomial> relations = {});

/// R/(x): relations a + (x). Throws std::invalid_argument when x is a unit.
PresentationRef quotient_by_element(const PresentationRef& ring, const Polynomial& x);

/// An ideal of R, stored through its preimage in the ambient ring: the
/// generators plus the relations. Values are immutable; copies share caches.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PresentationRef ring, std::vector<Polynomial> generators);

  static Ideal unit(const PresentationRef& ring);
  static Ideal zero(const PresentationRef& ring);
  static Ideal maximal(const PresentationRef& ring);
  /// Wraps a reduced Groebner basis of a preimage (must contain a).
  static Ideal from_groebner(const PresentationRef& ring, std::vector<Polynomial> basis);

  const PresentationRef& ring() const { return ring_; }
  const RingRef& ambient() const { return ring_->ambient(); }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Generated by monomials in a ring with monomial relations: handled by
  /// pure monomial arithmetic.
  bool is_monomial() const { return monomial_; }
  /// Minimal monomial generators of the preimage (monomial ideals only).
  const std::vector<Monomial>& monomial_basis() const;

  /// Reduced Groebner basis of the preimage in the ambient order.
  const std::vector<Polynomial>& groebner_basis() const;
  /// The basis is already cached (or trivially available).
  bool groebner_basis_known() const;
  /// Generators of the preimage modulo the relations, used for products:
  /// minimal monomials, or the Groebner basis without elements of a.
  const std::vector<Polynomial>& product_generators() const;

  bool is_unit() const;
  /// The preimage equals a.
  bool is_zero() const;
  /// Finite-length quotient (affinely; with a floor this is the local notion).
  bool is_m_primary() const;
  /// lambda(R/I). Throws InfiniteLength unless m-primary.
  std::size_t quotient_length() const;
  /// o(I) = max{n : I <= m^n}. Throws for the zero and unit ideals.
  unsigned order_in_m() const;

  /// I^n through the shared cache; throws CapExceeded past power_cap().
  Ideal power(unsigned n) const;
  /// m*I, cached.
  Ideal maximal_multiple() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  /// The quotient algebra k[x]/preimage (fresh object; owns its memo).
  StandardBasis quotient_algebra() const;

  std::string to_string() const;

 private:
  struct Cache;
  Ideal(PresentationRef ring, std::vector<Polynomial> generators, bool from_basis);

  PresentationRef ring_;
  std::vector<Polynomial> gens_;
  bool monomial_ = false;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// (A : B). Linear algebra when A is m-primary, monomial staircase tests for
/// monomial ideals, auxiliary-variable elimination otherwise. Throws
/// std::invalid_argument when B is zero.
Ideal ideal_colon(const Ideal& a, const Ideal& b);
/// (A : B) for m-primary A given an ideal C with C*B <= A (faster when C is
/// close to the answer).
Ideal ideal_colon(const Ideal& a, const Ideal& b, const Ideal& lower_bound);
/// (A : B) always through elimination (general, slower; used as a cross-check).
Ideal ideal_colon_by_elimination(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// A + F computed inside k[x]/F by linear algebra; F must be m-primary.
Ideal sum_with_floor(const Ideal& a, const Ideal& floor);
/// lambda(R/(A + F)); with F <= A locally this is the local length of R/A.
std::size_t length_with_floor(const Ideal& a, const Ideal& floor);

/// Local test of I^{n+1} = J*I^n through Nakayama:
/// I^{n+1} <= J*I^n + m*I^{n+1}. Requires J <= I and I m-primary.
/// With `modulo` nonempty the test runs in R/(modulo). With `exact` false
/// the rank is only computed modulo a large prime: a `true` answer is still
/// exact, a `false` one is a screen.
bool reduction_step_holds(const Ideal& i, const Ideal& j, unsigned n,
                          const std::vector<Polynomial>& modulo = {}, bool exact = true);

/// Generators of A*B from the stored generators (no Groebner basis of
/// either factor is computed).
std::vector<Polynomial> generator_products(const Ideal& a, const Ideal& b);

/// Sum of c_k*g_k over the generators with integers c_k uniform in
/// [-bound, bound], not all zero. Deterministic in `seed`.
Polynomial random_combination(const Ideal& a, std::uint64_t seed, unsigned bound);

/// Seed mixing for reproducible sub-streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

}  // namespace rednum
