#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rednum/hilbert.hpp"
#include "rednum/ideal.hpp"

namespace rednum {

/// A reduction J of I with its reduction number, verified step by step.
struct ReductionCertificate {
  bool verified = false;
  std::vector<Polynomial> generators;
  unsigned r = 0;
  /// Verdict of I^{n+1} = J I^n for n = 0, 1, ... as scanned (through r+2
  /// on success).
  std::vector<bool> trail;
  unsigned cap = 0;
  bool cap_from_vasconcelos = false;
  unsigned attempts = 0;  // index (1-based) of the attempt that produced J
  unsigned coefficient_bound = 0;
  unsigned samples = 0;   // verified reductions compared by the search
  std::string failure;
};

/// Scan cap: the explicit value, else floor(d e_0 / o) - 2d + 1 when e_0 is
/// known (flagged), else 20.
struct ReductionCap {
  unsigned value = 20;
  bool from_vasconcelos = false;
};
ReductionCap reduction_cap(std::optional<unsigned> explicit_cap, unsigned d, const std::optional<mpz_class>& e0,
                           std::optional<unsigned> order);

/// Scans n = 0..cap for I^{n+1} = J I^n (in R/(modulo) when given) and
/// confirms the first success at r+1 and r+2.
ReductionCertificate is_reduction_with_number(const Ideal& i, const Ideal& j, unsigned cap,
                                              const std::vector<Polynomial>& modulo = {});

/// Draws d random combinations of I's generators until `samples` of them
/// are reductions within the cap, and keeps the one with the least r (the
/// earliest on ties). The coefficient bound starts at 1 and doubles after
/// each failed attempt, up to 4. `first`, if given, is used as the first
/// generator of every candidate. Attempt k uses the seed derive_seed(seed, k).
ReductionCertificate find_minimal_reduction(const Ideal& i, unsigned d, std::uint64_t seed, unsigned attempts,
                                            unsigned cap, const std::optional<Polynomial>& first = std::nullopt,
                                            unsigned samples = 1);

/// Superficiality by coefficient preservation: e_i(I) = e_i(I R/(x)) for
/// i < d, and x in I \ m I.
struct SuperficialCertificate {
  bool accepted = false;
  Polynomial element;
  /// (e_i(I), e_i(I R/(x))) for i = 0..d-1.
  std::vector<std::pair<mpz_class, mpz_class>> comparison;
  bool in_i_not_m_i = false;
  unsigned attempts = 0;
  std::string failure;
};

SuperficialCertificate check_superficial(const Ideal& i, const HilbertData& h, const Polynomial& x);

SuperficialCertificate find_superficial_element(const Ideal& i, const HilbertData& h, std::uint64_t seed,
                                                unsigned attempts);

}  // namespace rednum
