#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rednum/filtration.hpp"
#include "rednum/parser.hpp"
#include "rednum/reduction.hpp"

using namespace rednum;

namespace {

PresentationRef qpoly(std::vector<std::string> vars) {
  return make_presentation(make_ring(Field::rationals(), std::move(vars)));
}

Ideal ideal_of(const PresentationRef& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(parse_polynomial(t, r->ambient()));
  return Ideal(r, std::move(gens));
}

bool in_monomial_ideal(const Monomial& u, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); });
}

std::vector<Monomial> products(const std::vector<Monomial>& gens, unsigned n) {
  std::vector<Monomial> out{Monomial()};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Monomial> next;
    for (const auto& a : out) {
      for (const auto& g : gens) {
        const Monomial m = a * g;
        if (std::find(next.begin(), next.end(), m) == next.end()) next.push_back(m);
      }
    }
    out = std::move(next);
  }
  return out;
}

// lambda(R/~I^n) for a monomial ideal from the definition: u lies in ~I^n
// when u I^s <= I^{n+s} for some s (checked for s <= max_s).
std::size_t closure_colength(const std::vector<Monomial>& gens, unsigned n, std::size_t nvars, unsigned bound,
                             unsigned max_s) {
  std::vector<std::vector<Monomial>> powers;
  for (unsigned k = 0; k <= n + max_s; ++k) powers.push_back(products(gens, k));
  std::size_t count = 0;
  for (const auto& u : oracle::monomials_below(nvars, bound)) {
    bool inside = false;
    for (unsigned s = 0; s <= max_s && !inside; ++s) {
      inside = std::all_of(powers[s].begin(), powers[s].end(),
                           [&](const Monomial& g) { return in_monomial_ideal(u * g, powers[n + s]); });
    }
    if (!inside) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("closure of the two-variable ideal with a gap") {
  auto r = qpoly({"x", "y"});
  Ideal i = ideal_of(r, {"x^4", "x^3*y", "x*y^3", "y^4"});
  RatliffRush rr(i);
  const auto c1 = rr.closure(1);
  CHECK(c1.certified);
  CHECK(c1.ideal.contains(parse_polynomial("x^2*y^2", r->ambient())));
  CHECK_FALSE(i.contains(parse_polynomial("x^2*y^2", r->ambient())));
  CHECK(c1.ideal.quotient_length() == 10);
  for (unsigned n = 2; n <= 4; ++n) CHECK(ideal_equal(rr.closure(n).ideal, i.power(n)));

  Ideal j = ideal_of(r, {"x^4", "y^4"});
  const auto table = build_filtration_table(rr, 5, std::make_pair(j, 2u));
  CHECK(table.rho.value == 2);
  CHECK(table.rho.certified);
  REQUIRE(table.rtilde);
  CHECK(table.rtilde->value == 1);
  CHECK(table.v.front() == 6);
  CHECK_FALSE(depth_g_positive(table, 1).value);
  CHECK(depth_g_positive(table, 2).value);
  CHECK(depth_g_positive(table, 2).certified);
}

TEST_CASE("closures agree with the definition on monomial ideals") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    auto r = qpoly({"x", "y"});
    const auto gens = oracle::random_monomial_ideal(rng, 2, 5, 3);
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial(r->ambient(), {{Scalar(1), m}}));
    RatliffRush rr(Ideal(r, polys));
    for (unsigned n = 1; n <= 2; ++n) {
      const auto c = rr.closure(n);
      REQUIRE(c.certified);
      CHECK(c.ideal.quotient_length() == closure_colength(gens, n, 2, 5 * n + 2, 4));
    }
  }
}

TEST_CASE("closure of a power of a power") {
  auto r = qpoly({"x", "y"});
  Ideal i = ideal_of(r, {"x^5", "x^4*y", "x*y^4", "y^5", "x^2*y^2"});
  RatliffRush base(i);
  RatliffRush square(i.power(2));
  for (unsigned n = 1; n <= 2; ++n) CHECK(ideal_equal(square.closure(n).ideal, base.closure(2 * n).ideal));
}

TEST_CASE("chain and reduction formulas agree") {
  auto r = qpoly({"x", "y", "z"});
  Ideal i = ideal_of(r, {"x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "x*z"});
  const auto h = hilbert_coefficients(i, 3);
  const auto red = find_minimal_reduction(i, 3, 5, 12, 10);
  REQUIRE(red.verified);
  RatliffRush rr(i);
  for (unsigned n = 1; n <= 3; ++n) {
    const auto a = rr.closure(n);
    const auto b = ratliff_rush_by_reduction(i, red.generators, n);
    REQUIRE(a.certified);
    REQUIRE(b.certified);
    CHECK(ideal_equal(a.ideal, b.ideal));
  }
  (void)h;
}

TEST_CASE("v numbers sum to e1 in dimension two") {
  auto r = qpoly({"x", "y"});
  Ideal i = ideal_of(r, {"x^4", "x^3*y", "x*y^3", "y^4"});
  Ideal j = ideal_of(r, {"x^4", "y^4"});
  RatliffRush rr(i);
  std::size_t sum = 0;
  for (unsigned n = 0; n < 5; ++n) sum += v_number(rr, j, 2, n);
  CHECK(sum == 6);
}
