#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rednum/hilbert.hpp"
#include "rednum/parser.hpp"
#include "rednum/spec.hpp"

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

mpz_class choose(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// sum_i (-1)^i e_i C(n+d-1-i, d-i), evaluated independently of the library.
mpz_class samuel_polynomial(const std::vector<mpz_class>& e, long d, long n) {
  mpz_class out = 0;
  for (long i = 0; i <= d; ++i) out += (i % 2 ? -1 : 1) * e[i] * choose(n + d - 1 - i, d - i);
  return out;
}

// Standard monomials of a monomial ideal given by its generators: counted
// by divisibility over the box below `bound` in every variable.
std::size_t monomial_colength(const std::vector<Monomial>& gens, std::size_t nvars, unsigned bound) {
  std::size_t count = 0;
  for (const auto& u : oracle::monomials_below(nvars, bound)) {
    bool inside = false;
    for (const auto& g : gens) inside = inside || g.divides(u);
    if (!inside) ++count;
  }
  return count;
}

std::vector<Monomial> monomial_power(const std::vector<Monomial>& gens, unsigned n) {
  std::vector<Monomial> out{Monomial()};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Monomial> next;
    for (const auto& a : out) {
      for (const auto& g : gens) next.push_back(a * g);
    }
    std::sort(next.begin(), next.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("Hilbert coefficients of powers of the maximal ideal") {
  for (unsigned k = 1; k <= 3; ++k) {
    auto r = qpoly({"x", "y"});
    const auto h = hilbert_coefficients(Ideal::maximal(r).power(k), 2);
    REQUIRE(h.certified);
    // lambda(R/m^{kn}) = C(kn+1, 2) gives e = (k^2, (k^2-k)/2, 0).
    CHECK(h.coefficients == std::vector<mpz_class>{k * k, (k * k - k) / 2, 0});
  }
  auto r3 = qpoly({"x", "y", "z"});
  const auto h3 = hilbert_coefficients(Ideal::maximal(r3).power(2), 3);
  REQUIRE(h3.certified);
  for (long n = 1; n <= 6; ++n) CHECK(samuel_polynomial(h3.coefficients, 3, n) == choose(2 * n + 2, 3));
}

TEST_CASE("Hilbert-Samuel values match staircase counts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    auto r = qpoly({"x", "y"});
    const auto gens = oracle::random_monomial_ideal(rng, 2, 4, 2);
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial(r->ambient(), {{Scalar(1), m}}));
    Ideal i(r, polys);
    const auto h = hilbert_coefficients(i, 2);
    REQUIRE(h.certified);
    for (unsigned n = 1; n <= 4; ++n) {
      const std::size_t expected = monomial_colength(monomial_power(gens, n), 2, 4 * n + 2);
      CHECK(hilbert_samuel_value(i, n) == expected);
      if (n > h.postulation_index) CHECK(samuel_polynomial(h.coefficients, 2, n) == expected);
    }
  }
}

TEST_CASE("coefficients of the two and three variable worked ideals") {
  auto r2 = qpoly({"x", "y"});
  const auto a = hilbert_coefficients(ideal_of(r2, {"x^4", "x^3*y", "x*y^3", "y^4"}), 2);
  CHECK(a.certified);
  CHECK(a.coefficients[0] == 16);
  CHECK(a.coefficients[1] == 6);

  auto r3 = qpoly({"x", "y", "z"});
  const auto b = hilbert_coefficients(ideal_of(r3, {"x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "x*z"}), 3);
  CHECK(b.certified);
  CHECK(b.coefficients == std::vector<mpz_class>{8, 4, 0, 0});
}

TEST_CASE("regime detection on a synthetic length function") {
  // P(n) = 5 C(n+1, 2) - 3 n + 1 from n = 3 on, irregular before.
  auto h = [](unsigned n) -> std::size_t {
    if (n == 0) return 0;
    if (n < 3) return 2 * n;
    return static_cast<std::size_t>(5 * (n + 1) * n / 2 - 3 * n + 1);
  };
  const auto data = analyze_hilbert_function(h, 2, 30);
  REQUIRE(data.certified);
  CHECK(data.coefficients == std::vector<mpz_class>{5, 3, 1});
  CHECK(data.postulation_index <= 3);

  auto flat = [](unsigned n) -> std::size_t { return n * n * n; };
  const auto bad = analyze_hilbert_function(flat, 1, 12);
  CHECK_FALSE(bad.certified);
}

TEST_CASE("Krull dimension of presented rings") {
  CHECK(krull_dimension(qpoly({"x", "y", "z"})) == 3);
  auto ambient = make_ring(Field::rationals(), {"x", "y"});
  CHECK(krull_dimension(make_presentation(ambient, {parse_polynomial("x*y", ambient)})) == 1);
  CHECK(krull_dimension(make_presentation(ambient, {parse_polynomial("x^2", ambient), parse_polynomial("y^3", ambient)})) ==
        0);
  for (unsigned d = 2; d <= 3; ++d) {
    const IdealSpec s = example_family_ring(0, d);
    auto r = make_ring(Field::rationals(), s.vars);
    std::vector<Polynomial> rels;
    for (const auto& t : s.relations) rels.push_back(parse_polynomial(t, r));
    CHECK(krull_dimension(make_presentation(r, rels)) == d);
  }
}

TEST_CASE("type and embedding dimension") {
  auto r = qpoly({"x", "y"});
  const auto inv = cm_type_and_mu(r, ideal_of(r, {"x^2", "y^3"}));
  CHECK(inv.mu == 2);
  CHECK(inv.cm_type == 1);

  auto ambient = make_ring(Field::rationals(), {"x", "y", "z"});
  // k[x,y,z]/(x,y,z)^2 has type 3 (the socle is m).
  std::vector<Polynomial> rels;
  for (const char* t : {"x^2", "y^2", "z^2", "x*y", "y*z", "x*z"}) rels.push_back(parse_polynomial(t, ambient));
  auto art = make_presentation(ambient, rels);
  const auto a = cm_type_and_mu(art, Ideal::zero(art));
  CHECK(a.mu == 3);
  CHECK(a.cm_type == 3);
}
