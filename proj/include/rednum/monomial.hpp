#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rednum {

/// Hard limit on ambient variables (the largest registry ring uses 9, plus one
/// auxiliary variable for elimination).
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with cached total degree. Unused trailing slots are zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Sum of the exponents of variables [0, k).
  unsigned block_degree(std::size_t k) const;

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  /// this / d; requires d | this.
  Monomial quotient(const Monomial& d) const;
  bool coprime(const Monomial& other) const;

  void set(std::size_t i, unsigned e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;
  const std::array<Exponent, kMaxVars>& exponents() const { return exp_; }

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders used by the engine.
struct MonomialOrder {
  enum class Kind { GradedReverseLex, Lex, EliminationBlock };

  Kind kind = Kind::GradedReverseLex;
  /// Number of leading variables eliminated (EliminationBlock only).
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::EliminationBlock, k}; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  static MonomialOrder parse(const std::string& name);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.block == b.block;
  }
};

/// Removes duplicates and non-minimal elements; result sorted increasing in `order`.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> mons, const MonomialOrder& order);

bool divisible_by_any(const Monomial& m, std::span<const Monomial> gens);

/// Standard monomials of the monomial ideal generated by `gens` in `nvars`
/// variables. Throws if the ideal does not contain a power of each variable.
std::vector<Monomial> standard_monomials(std::span<const Monomial> gens, std::size_t nvars);

/// Every variable in [0, nvars) has a pure power among `gens`.
bool has_pure_powers(std::span<const Monomial> gens, std::size_t nvars);

/// All monomials of exactly the given degree in `nvars` variables.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace rednum
