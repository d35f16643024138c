#include "rednum/monomial.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace rednum {

namespace {

void check_exponent(unsigned long e) {
  if (e > 0xFFFFu) throw std::overflow_error("monomial exponent exceeds 65535");
}

}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars) + ")");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    exp_[i] = static_cast<Exponent>(exponents[i]);
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

unsigned Monomial::block_degree(std::size_t k) const {
  unsigned s = 0;
  for (std::size_t i = 0; i < k && i < kMaxVars; ++i) s += exp_[i];
  return s;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("variable index out of range");
  check_exponent(e);
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    q.exp_[i] = static_cast<Exponent>(exp_[i] - d.exp_[i]);
  }
  q.degree_ = degree_ - d.degree_;
  return q;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(a.exp_[i]) + b.exp_[i];
    check_exponent(e);
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::Lex) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  if (kind == Kind::EliminationBlock) {
    const unsigned da = a.block_degree(block);
    const unsigned db = b.block_degree(block);
    if (da != db) return da > db ? 1 : -1;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::GradedReverseLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::EliminationBlock:
      return "elim:" + std::to_string(block);
  }
  return "grevlex";
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  if (name.rfind("elim:", 0) == 0) return elimination(std::stoul(name.substr(5)));
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::vector<Monomial> minimize_monomials(std::vector<Monomial> mons, const MonomialOrder& order) {
  std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.compare(a, b) < 0;
  });
  std::vector<Monomial> kept;
  kept.reserve(mons.size());
  for (const auto& m : mons) {
    if (!kept.empty() && kept.back() == m) continue;
    if (!divisible_by_any(m, kept)) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return kept;
}

bool divisible_by_any(const Monomial& m, std::span<const Monomial> gens) {
  for (const auto& g : gens) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool has_pure_powers(std::span<const Monomial> gens, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : gens) {
      if (g[v] == g.degree() && g.degree() > 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(std::span<const Monomial> gens, std::size_t nvars) {
  if (!has_pure_powers(gens, nvars)) {
    throw std::domain_error("monomial ideal is not zero-dimensional: infinite standard set");
  }
  std::vector<Monomial> out;
  if (divisible_by_any(Monomial{}, gens)) return out;
  std::unordered_set<Monomial, MonomialHash> seen;
  out.push_back(Monomial{});
  seen.insert(Monomial{});
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Monomial base = out[head];
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial next = base * Monomial::variable(v);
      if (seen.count(next)) continue;
      seen.insert(next);
      if (!divisible_by_any(next, gens)) out.push_back(next);
    }
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace rednum
