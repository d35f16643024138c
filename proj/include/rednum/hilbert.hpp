#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "rednum/ideal.hpp"

namespace rednum {

/// Hilbert-Samuel function and the fitted polynomial
/// P(n) = sum_i (-1)^i e_i C(n+d-1-i, d-i).
struct HilbertData {
  std::vector<std::size_t> values;  // H(0), H(1), ..., H(N)
  unsigned dimension = 0;
  std::vector<mpz_class> coefficients;  // e_0..e_d; empty when no fit was certified
  unsigned postulation_index = 0;
  unsigned window_used = 0;
  bool certified = false;
  /// Set when the power cap stopped the computation.
  bool cap_exceeded = false;
};

/// Binomial polynomial C(n, k) = n(n-1)...(n-k+1)/k!, any integer n.
mpz_class binomial(long n, unsigned k);

mpz_class hilbert_polynomial_value(const std::vector<mpz_class>& e, unsigned d, long n);

/// Solves for e_0..e_d given P(first_n + k) = values[k], k = 0..d.
/// Throws std::domain_error when the solution is not integral.
std::vector<mpz_class> fit_hilbert_coefficients(const std::vector<mpz_class>& values, unsigned d, long first_n);

/// Regime detection and fit for any length function n -> h(n). The d-th
/// difference must agree across d+2 consecutive values; the fit is then
/// checked against two further values. Stops (uncertified) at `max_n`.
HilbertData analyze_hilbert_function(const std::function<std::size_t(unsigned)>& h, unsigned d, unsigned max_n);

std::size_t hilbert_samuel_value(const Ideal& i, unsigned n);

/// Uses the ring's dimension (computing it when unknown) unless given.
HilbertData hilbert_coefficients(const Ideal& i, std::optional<unsigned> dimension = std::nullopt);

/// Hilbert data of I R/(x) for x in m, from lambda(R/(I^n + (x))).
HilbertData hilbert_coefficients_modulo(const Ideal& i, const Polynomial& x, unsigned dimension);

/// Degree of the Hilbert-Samuel polynomial of m. Stored in the presentation.
unsigned krull_dimension(const PresentationRef& ring);

struct RingInvariants {
  unsigned dimension = 0;
  std::size_t mu = 0;       // lambda(m/m^2)
  std::size_t cm_type = 0;  // lambda((J:m)/J)
};

/// mu(m) and lambda((J:m)/J) for a parameter ideal J (d generators). When
/// d = 0, J must be zero and the type is the socle dimension. `floor` is an
/// m-primary ideal locally inside J (defaults to J itself).
RingInvariants cm_type_and_mu(const PresentationRef& ring, const Ideal& j,
                              const std::optional<Ideal>& floor = std::nullopt);

}  // namespace rednum
