#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rednum {

/// Exact scalars. Over Q a value is a canonical mpq; over F_p it is an
/// integer representative in [0, p) stored with denominator 1.
using Scalar = mpq_class;

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field descriptor: the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar from_integer(const mpz_class& n) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar normalize(const Scalar& a) const { return from_rational(a); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Reduces an integer into the field's canonical integer range (identity over Q).
  void reduce_integer(mpz_class& n) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
  mpz_class pz_;
};

/// Default prime for exploratory F_p runs.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

}  // namespace rednum
