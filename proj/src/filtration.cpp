#include "rednum/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "rednum/groebner.hpp"

namespace rednum {

RatliffRush::RatliffRush(Ideal i, unsigned chain_cap) : i_(std::move(i)), cap_(chain_cap) {
  if (cap_ < 3) throw std::invalid_argument("RatliffRush: chain cap must be at least 3");
}

const Ideal& RatliffRush::chain(unsigned n, unsigned t) {
  const auto key = std::make_pair(n, t);
  auto it = chain_.find(key);
  if (it != chain_.end()) return it->second;
  Ideal value;
  if (t == 0) {
    value = i_.power(n);
  } else {
    const Ideal upper = chain(n + 1, t - 1);
    const Ideal lower = chain(n, t - 1);
    value = ideal_colon(upper, i_, lower);
    if (!value.contains(lower)) throw std::logic_error("Ratliff-Rush chain is not ascending");
  }
  return chain_.emplace(key, std::move(value)).first->second;
}

ClosureResult RatliffRush::closure(unsigned n) {
  auto hit = closures_.find(n);
  if (hit != closures_.end()) return hit->second;
  ClosureResult out;
  if (n == 0) {
    out.ideal = Ideal::unit(i_.ring());
    out.certified = true;
    return closures_.emplace(n, out).first->second;
  }
  unsigned streak = 0;
  Ideal prev = chain(n, 1);
  unsigned t = 1;
  while (streak < 2 && t < cap_) {
    ++t;
    const Ideal& cur = chain(n, t);
    if (ideal_equal(prev, cur)) {
      ++streak;
    } else {
      streak = 0;
      prev = cur;
    }
  }
  out.ideal = prev;
  out.certified = streak >= 2;
  out.steps = t;
  return closures_.emplace(n, out).first->second;
}

ClosureResult ratliff_rush_power(const Ideal& i, unsigned n, unsigned chain_cap) {
  RatliffRush rr(i, chain_cap);
  return rr.closure(n);
}

ClosureResult ratliff_rush_by_reduction(const Ideal& i, const std::vector<Polynomial>& reduction, unsigned n,
                                        unsigned max_k) {
  if (n == 0) return {Ideal::unit(i.ring()), true, 0};
  auto value_at = [&](unsigned k) {
    std::vector<Polynomial> powers;
    for (const auto& x : reduction) {
      Polynomial p = Polynomial::constant(x.ring(), 1);
      for (unsigned e = 0; e < k; ++e) p = p * x;
      powers.push_back(p);
    }
    return ideal_colon(i.power(n + k), Ideal(i.ring(), std::move(powers)), i.power(n));
  };
  ClosureResult out;
  unsigned k = 1;
  Ideal prev = value_at(k);
  unsigned streak = 0;
  while (streak < 2 && 2 * k <= max_k) {
    k *= 2;
    Ideal cur = value_at(k);
    if (ideal_equal(prev, cur)) {
      ++streak;
    } else {
      streak = 0;
      prev = std::move(cur);
    }
  }
  out.ideal = prev;
  out.certified = streak >= 2;
  out.steps = k;
  return out;
}

std::size_t v_number(RatliffRush& rr, const Ideal& j, unsigned r, unsigned n) {
  const Ideal& i = rr.ideal();
  const Ideal floor = i.power(std::max(n, r) + 1);
  const ClosureResult next = rr.closure(n + 1);
  std::vector<Polynomial> prods;
  if (n == 0) {
    prods = j.generators();
  } else {
    prods = generator_products(j, rr.closure(n).ideal);
  }
  for (const auto& p : prods) {
    if (!next.ideal.contains(p)) throw std::logic_error("v_number: J times a closure escapes the next closure");
  }
  const std::size_t lower = length_with_floor(Ideal(i.ring(), std::move(prods)), floor);
  const std::size_t upper = next.ideal.quotient_length();
  if (lower < upper) throw std::logic_error("v_number: negative length");
  return lower - upper;
}

CertifiedValue rtilde(const FiltrationTable& table, std::optional<long> e2) {
  CertifiedValue out;
  const auto& v = table.v;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) out.value = static_cast<unsigned>(k + 1);
  }
  bool tail = v.size() >= 3;
  for (std::size_t k = v.size() >= 3 ? v.size() - 3 : 0; k < v.size(); ++k) tail = tail && v[k] == 0;
  bool closures = std::all_of(table.records.begin(), table.records.end(),
                              [](const FiltrationRecord& r) { return r.certified; });
  out.certified = tail && closures;
  if (e2 && static_cast<long>(table.horizon) < *e2 + 2) out.certified = false;
  return out;
}

FiltrationTable build_filtration_table(RatliffRush& rr, unsigned horizon,
                                       const std::optional<std::pair<Ideal, unsigned>>& reduction,
                                       std::optional<long> e2) {
  if (horizon == 0) throw std::invalid_argument("build_filtration_table: horizon must be positive");
  FiltrationTable table;
  table.horizon = horizon;
  const Ideal& i = rr.ideal();
  // Closure of the last index plus one is needed for v_{horizon-1}.
  for (unsigned n = 1; n <= horizon; ++n) {
    FiltrationRecord rec;
    rec.n = n;
    rec.power = i.power(n);
    const ClosureResult c = rr.closure(n);
    rec.closure = c.ideal;
    rec.certified = c.certified;
    rec.power_length = rec.power.quotient_length();
    rec.closure_length = rec.closure.quotient_length();
    rec.closed = rec.power_length == rec.closure_length;
    table.records.push_back(std::move(rec));
  }
  unsigned start = horizon + 1;
  while (start > 1 && table.records[start - 2].closed) --start;
  table.rho.value = start;
  const bool all_certified = std::all_of(table.records.begin(), table.records.end(),
                                         [](const FiltrationRecord& r) { return r.certified; });
  table.rho.certified = start <= horizon && all_certified && reduction.has_value() &&
                        horizon >= std::max(reduction->second + 2, 2u);
  if (reduction) {
    for (unsigned n = 0; n < horizon; ++n) table.v.push_back(v_number(rr, reduction->first, reduction->second, n));
    table.rtilde = rtilde(table, e2);
  }
  return table;
}

CertifiedValue rho(RatliffRush& rr, unsigned horizon, std::optional<unsigned> reduction_number) {
  FiltrationTable t = build_filtration_table(rr, horizon);
  CertifiedValue out = t.rho;
  const bool all_certified = std::all_of(t.records.begin(), t.records.end(),
                                         [](const FiltrationRecord& r) { return r.certified; });
  out.certified = out.value <= horizon && all_certified && reduction_number.has_value() &&
                  horizon >= std::max(*reduction_number + 2, 2u);
  return out;
}

CertifiedFlag depth_g_positive(const FiltrationTable& table, unsigned t) {
  if (t == 0) throw std::invalid_argument("depth_g_positive: t must be positive");
  CertifiedFlag out;
  out.value = true;
  for (unsigned n = t; n <= table.horizon; n += t) {
    const auto& rec = table.records[n - 1];
    if (!rec.closed) {
      // A strictly larger chain member already witnesses ~I^n != I^n.
      out.value = false;
      out.certified = true;
      return out;
    }
  }
  out.certified = table.rho.certified;
  return out;
}

}  // namespace rednum
