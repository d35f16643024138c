#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rednum/ideal.hpp"

namespace rednum {

/// An ideal with a flag telling whether its computation reached a
/// confirmed fixed point.
struct ClosureResult {
  Ideal ideal;
  bool certified = false;
  unsigned steps = 0;  // chain length t (or exponent k) used
};

/// Ratliff-Rush closures of the powers of one ideal. The colon ideals
/// C(n, t) = (I^{n+t} : I^t) = (C(n+1, t-1) : I) are memoized, so the
/// closures of all powers share work.
class RatliffRush {
 public:
  explicit RatliffRush(Ideal i, unsigned chain_cap = 20);

  const Ideal& ideal() const { return i_; }
  unsigned chain_cap() const { return cap_; }

  /// ~I^n: stable once C(n, t) = C(n, t+1) = C(n, t+2).
  ClosureResult closure(unsigned n);
  /// (I^{n+t} : I^t).
  const Ideal& chain(unsigned n, unsigned t);

 private:
  Ideal i_;
  unsigned cap_;
  std::map<std::pair<unsigned, unsigned>, Ideal> chain_;
  std::map<unsigned, ClosureResult> closures_;
};

ClosureResult ratliff_rush_power(const Ideal& i, unsigned n, unsigned chain_cap = 20);

/// ~I^n as (I^{n+k} : (x_1^k, ..., x_d^k)) for generators x_i of a
/// reduction; k doubles from 1 until two consecutive values agree.
ClosureResult ratliff_rush_by_reduction(const Ideal& i, const std::vector<Polynomial>& reduction, unsigned n,
                                        unsigned max_k = 32);

struct CertifiedValue {
  unsigned value = 0;
  bool certified = false;
};

struct CertifiedFlag {
  bool value = false;
  bool certified = false;
};

struct FiltrationRecord {
  unsigned n = 0;
  Ideal power;
  Ideal closure;
  std::size_t power_length = 0;
  std::size_t closure_length = 0;
  bool closed = false;
  bool certified = false;
};

/// Per-index data of the Ratliff-Rush filtration up to a horizon.
struct FiltrationTable {
  unsigned horizon = 0;
  std::vector<FiltrationRecord> records;  // records[n-1] is index n
  CertifiedValue rho;
  /// v_n = lambda(~I^{n+1} / J ~I^n) for n = 0..horizon-1 (when J is given).
  std::vector<std::size_t> v;
  std::optional<CertifiedValue> rtilde;
};

/// Builds the table for n = 1..horizon. `reduction` (J with its verified
/// reduction number r) enables v_n and r~. `e2` (dimension 2) sharpens the
/// r~ certificate. ρ is certified when the horizon reaches max(r+2, 2) and
/// the tail is closed.
FiltrationTable build_filtration_table(RatliffRush& rr, unsigned horizon,
                                       const std::optional<std::pair<Ideal, unsigned>>& reduction = std::nullopt,
                                       std::optional<long> e2 = std::nullopt);

/// Least i >= 1 with ~I^n = I^n for i <= n <= horizon.
CertifiedValue rho(RatliffRush& rr, unsigned horizon, std::optional<unsigned> reduction_number = std::nullopt);

/// depth G(I^t) > 0 read off ~I^{tn} = I^{tn} for tn <= horizon;
/// certified when ρ is certified within the horizon.
CertifiedFlag depth_g_positive(const FiltrationTable& table, unsigned t);

/// lambda(R/J ~I^n) - lambda(R/~I^{n+1}); `r` is the reduction number of J.
/// Throws std::logic_error when J ~I^n is not inside ~I^{n+1}.
std::size_t v_number(RatliffRush& rr, const Ideal& j, unsigned r, unsigned n);

/// Largest n <= horizon with ~I^n != J ~I^{n-1}, from the table's v.
CertifiedValue rtilde(const FiltrationTable& table, std::optional<long> e2 = std::nullopt);

}  // namespace rednum
