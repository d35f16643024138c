#include "rednum/polynomial.hpp"

#include <algorithm>
#include <regex>
#include <unordered_set>

namespace rednum {

namespace {

bool valid_identifier(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, re);
}

}  // namespace

PolyRing::PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
  if (vars_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  if (vars_.size() > kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingRef make_ring(Field field, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(field), std::move(variables), order);
}

RingRef with_order(const RingRef& ring, const MonomialOrder& order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->variables(), order);
}

Polynomial::Polynomial(RingRef ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    Scalar c = field.normalize(t.coef);
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = field.add(terms_.back().coef, c);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (c != 0) {
      terms_.push_back({std::move(c), t.mono});
    }
  }
}

Polynomial PolyBuilder::from_sorted(RingRef ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingRef ring, const Scalar& c) {
  return Polynomial(std::move(ring), {{c, Monomial{}}});
}

Polynomial Polynomial::monomial(RingRef ring, const Monomial& m, const Scalar& c) {
  return Polynomial(std::move(ring), {{c, m}});
}

Polynomial Polynomial::variable(RingRef ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index));
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
  return terms_.front().mono;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return terms_.front().coef;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::low_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coef));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const auto& field = ring_->field();
  Scalar cc = field.normalize(c);
  if (cc == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({field.mul(t.coef, cc), t.mono});
  return PolyBuilder::from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  const auto& field = ring_->field();
  Scalar cc = field.normalize(c);
  if (cc == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({field.mul(t.coef, cc), t.mono * m});
  return PolyBuilder::from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingRef& other) const {
  if (!ring_->same_variables(*other)) throw RingMismatch("in_ring: variable lists differ");
  if (ring_->order() == other->order()) return PolyBuilder::from_sorted(other, terms_);
  return Polynomial(other, terms_);
}

Polynomial Polynomial::embedded(const RingRef& larger) const {
  const auto& small = ring_->variables();
  const auto& big = larger->variables();
  if (big.size() < small.size() || larger->field() != ring_->field()) {
    throw RingMismatch("embedded: target ring does not extend the source ring");
  }
  std::vector<std::size_t> map(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    const int j = larger->index_of(small[i]);
    if (j < 0) throw RingMismatch("embedded: variable '" + small[i] + "' missing from target");
    map[i] = static_cast<std::size_t>(j);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < small.size(); ++i) m.set(map[i], t.mono[i]);
    out.push_back({t.coef, m});
  }
  return Polynomial(larger, std::move(out));
}

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || !g.ring()) throw RingMismatch("polynomial without a ring");
  if (f.ring() != g.ring() && !(*f.ring() == *g.ring())) {
    throw RingMismatch("polynomials belong to different rings");
  }
}

namespace {

Polynomial add_scaled(const Polynomial& a, const Polynomial& b, bool subtract) {
  check_same_ring(a, b);
  const auto& ring = a.ring();
  const auto& field = ring->field();
  const auto& order = ring->order();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size()) {
      c = -1;
    } else if (j == tb.size()) {
      c = 1;
    } else {
      c = order.compare(ta[i].mono, tb[j].mono);
    }
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back({subtract ? field.neg(tb[j].coef) : tb[j].coef, tb[j].mono});
      ++j;
    } else {
      Scalar s = subtract ? field.sub(ta[i].coef, tb[j].coef) : field.add(ta[i].coef, tb[j].coef);
      if (s != 0) out.push_back({std::move(s), ta[i].mono});
      ++i;
      ++j;
    }
  }
  return PolyBuilder::from_sorted(ring, std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, true); }

Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  const auto& field = a.ring()->field();
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) out.push_back({field.mul(s.coef, t.coef), s.mono * t.mono});
  }
  return Polynomial(a.ring(), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_variables(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

Polynomial poly_op(PolyOp kind, const Polynomial& f, const Polynomial& g) {
  switch (kind) {
    case PolyOp::Add:
      return f + g;
    case PolyOp::Sub:
      return f - g;
    case PolyOp::Mul:
      return f * g;
  }
  return f;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& vars = ring_->variables();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    mpq_class c = t.coef;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = format_monomial(t.mono, vars);
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace rednum
