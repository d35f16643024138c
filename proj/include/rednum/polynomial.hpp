#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rednum/field.hpp"
#include "rednum/monomial.hpp"

namespace rednum {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// k[x_1..x_n] with a default term order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  /// Same field and variable list (order may differ).
  bool same_variables(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_;
  }
  bool operator==(const PolyRing& other) const {
    return same_variables(other) && order_ == other.order_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingRef = std::shared_ptr<const PolyRing>;

RingRef make_ring(Field field, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex());

/// Returns `ring` with a different term order.
RingRef with_order(const RingRef& ring, const MonomialOrder& order);

struct Term {
  Scalar coef;
  Monomial mono;
};

/// Canonical sparse polynomial: nonzero coefficients, monomials strictly
/// decreasing in the ring's order. The empty term list is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingRef ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: merges equal monomials, drops zeros, sorts.
  Polynomial(RingRef ring, std::vector<Term> terms);

  static Polynomial constant(RingRef ring, const Scalar& c);
  static Polynomial monomial(RingRef ring, const Monomial& m, const Scalar& c = 1);
  static Polynomial variable(RingRef ring, std::size_t index);

  const RingRef& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  unsigned total_degree() const;
  /// Smallest total degree among terms (order of vanishing at the origin).
  unsigned low_degree() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_homogeneous() const;
  Scalar constant_term() const;

  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c = 1) const;
  /// Same polynomial re-sorted for another ring with identical variables.
  Polynomial in_ring(const RingRef& other) const;
  /// Image in a ring whose variables extend this one's (same leading names).
  Polynomial embedded(const RingRef& larger) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  friend struct PolyBuilder;
  RingRef ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_op(PolyOp kind, const Polynomial& f, const Polynomial& g);

/// Throws RingMismatch when f and g do not share a ring.
void check_same_ring(const Polynomial& f, const Polynomial& g);

/// Raw construction from terms already canonical for `ring` (no checks).
struct PolyBuilder {
  static Polynomial from_sorted(RingRef ring, std::vector<Term> terms);
};

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace rednum
