#include "rednum/field.hpp"

namespace rednum {

Field Field::prime(std::uint64_t p) {
  if (p < 2) throw ArithmeticError("field characteristic must be a prime >= 2");
  mpz_class pz(std::to_string(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0) {
    throw ArithmeticError("characteristic " + std::to_string(p) + " is not prime");
  }
  Field f(p);
  f.pz_ = pz;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  const std::string prefix = "Fp:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ArithmeticError("malformed field descriptor '" + text + "'");
    }
    return prime(std::stoull(digits));
  }
  if (text == "Fp") return prime(kDefaultPrime);
  throw ArithmeticError("unknown field descriptor '" + text + "' (expected Q or Fp:<p>)");
}

void Field::reduce_integer(mpz_class& n) const {
  if (p_ == 0) return;
  mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), pz_.get_mpz_t());
}

Scalar Field::from_integer(const mpz_class& n) const {
  if (p_ == 0) return Scalar(n);
  mpz_class r = n;
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) {
    mpq_class r = q;
    r.canonicalize();
    return r;
  }
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  reduce_integer(num);
  reduce_integer(den);
  if (den == 0) throw ArithmeticError("denominator vanishes modulo " + std::to_string(p_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t());
  mpz_class r = num * inv;
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  mpz_class r = -a.get_num();
  reduce_integer(r);
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw ArithmeticError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), pz_.get_mpz_t());
  return Scalar(r);
}

std::string Field::to_string() const {
  if (p_ == 0) return "Q";
  return "Fp:" + std::to_string(p_);
}

}  // namespace rednum
