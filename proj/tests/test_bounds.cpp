#include "doctest.h"
#include "rednum/bounds.hpp"

using namespace rednum;

namespace {

const BoundCheck& find(const BoundReport& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range(id);
}

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Invariants of the seven-variable quotient ring with I = m.
InvariantBundle maximal_ideal_bundle() {
  InvariantBundle b;
  b.d = 3;
  b.e = ints({8, 11, 4, 0});
  b.e_certified = true;
  b.length = 1;
  b.order = 1;
  b.r = 3;
  b.rho = CertifiedValue{3, true};
  b.depth_flags = {{1, {false, true}}, {2, {false, true}}, {3, {true, true}}};
  b.cm_type = 4;
  b.mu = 7;
  b.is_maximal_ideal = true;
  b.cohen_macaulay = Status::UserAsserted;
  b.rr_depth_at_least_two = Status::UserAsserted;
  return b;
}

}  // namespace

TEST_CASE("right-hand sides for the maximal ideal of the seven-variable ring") {
  const auto rep = evaluate_bounds(maximal_ideal_bundle());
  CHECK(find(rep, "B3").rhs == mpz_class(7));
  CHECK(find(rep, "B5").rhs == mpz_class(17));
  CHECK(find(rep, "B1").rhs == mpz_class(19));
  CHECK(find(rep, "B10").rhs == mpz_class(7));
  CHECK(find(rep, "B2").rhs == mpz_class(5));
  for (const char* id : {"B1", "B2", "B3", "B5", "B10"}) {
    CHECK(find(rep, id).applicable);
    CHECK(find(rep, id).holds == true);
  }
  // r = 3 is odd but depth G(m^2) = 0.
  CHECK_FALSE(find(rep, "B4").applicable);
  CHECK(rep.verdict == "consistent");
}

TEST_CASE("right-hand sides for the quartic ideal with printed coefficients") {
  InvariantBundle b;
  b.d = 3;
  b.e = ints({64, 48, 4, 0});
  b.e_certified = true;
  b.length = 35;
  b.order = 4;
  b.r = 3;
  b.cohen_macaulay = Status::Verified;
  const auto rep = evaluate_bounds(b);
  CHECK(find(rep, "B5").rhs == mpz_class(32));
  CHECK(find(rep, "B1").rhs == mpz_class(43));
  CHECK(find(rep, "B5").holds == true);
}

TEST_CASE("parameter ideal meets the linear bound") {
  InvariantBundle b;
  b.d = 2;
  b.e = ints({1, 0, 0});
  b.e_certified = true;
  b.length = 1;
  b.order = 1;
  b.r = 0;
  b.cohen_macaulay = Status::Verified;
  const auto rep = evaluate_bounds(b);
  CHECK(find(rep, "B2").rhs == mpz_class(1));
  CHECK(find(rep, "B2").holds == true);
  CHECK(find(rep, "B1").rhs == mpz_class(-1));
}

TEST_CASE("Buchsbaum formulas") {
  InvariantBundle b;
  b.d = 1;
  b.e = ints({5, 3});
  b.e_certified = true;
  b.length = 3;
  b.r = 2;
  b.e_of_j = ints({5, -1});
  b.e_of_j_certified = true;
  b.buchsbaum = Status::UserAsserted;
  auto check = find(evaluate_bounds(b), "B9");
  CHECK(check.rhs == mpz_class(3 + 1 - 5 + 3 + 2));
  CHECK(check.holds == true);

  b.d = 2;
  b.e = ints({5, 3, 0});
  b.depth_flags = {{1, {false, true}}, {2, {true, true}}};
  check = find(evaluate_bounds(b), "B9");
  CHECK(check.rhs == mpz_class(3 + 1 - 5 + 3 + 2 + 1));

  b.buchsbaum = Status::Unknown;
  CHECK_FALSE(find(evaluate_bounds(b), "B9").applicable);
}

TEST_CASE("hypothesis bookkeeping") {
  InvariantBundle b;
  b.d = 2;
  b.e = ints({16, 6, 0});
  b.e_certified = true;
  b.length = 11;
  b.order = 4;
  b.r = 5;  // deliberately past e_1 - e_0 + lambda + 1 = 2
  b.cohen_macaulay = Status::Verified;
  auto rep = evaluate_bounds(b);
  CHECK(find(rep, "B2").holds == false);
  CHECK(rep.verdict == "violation");

  b.cohen_macaulay = Status::UserAsserted;
  rep = evaluate_bounds(b);
  CHECK(rep.verdict == "violation under asserted hypotheses");

  b.cohen_macaulay = Status::Unknown;
  rep = evaluate_bounds(b);
  CHECK_FALSE(find(rep, "B2").applicable);
  CHECK(find(rep, "B2").reason.find("unknown") != std::string::npos);
  CHECK(rep.verdict == "consistent");

  b.cohen_macaulay = Status::Verified;
  b.e_certified = false;
  rep = evaluate_bounds(b);
  CHECK(find(rep, "B2").reason.find("uncertified ingredient") == 0);
  CHECK_FALSE(find(rep, "B2").rhs.has_value());
}

TEST_CASE("refinement by residue classes") {
  InvariantBundle b = maximal_ideal_bundle();
  b.r = 4;
  b.depth_flags = {{3, {true, true}}};
  const auto c = find(evaluate_bounds(b), "B3-mod");
  CHECK(c.rhs == mpz_class(11 - 8 + 1 + 1));
  CHECK(c.holds == true);
  b.r = 3;
  CHECK_FALSE(find(evaluate_bounds(b), "B3-mod").applicable);
}

TEST_CASE("Rossi's inequality outside the known cases") {
  InvariantBundle b = maximal_ideal_bundle();
  b.rr_depth_at_least_two = Status::Unknown;
  b.r = 9;
  b.rho = CertifiedValue{9, true};
  const auto rep = evaluate_bounds(b);
  CHECK_FALSE(find(rep, "B2").applicable);
  CHECK(find(rep, "B2").open_case_failure);
}

TEST_CASE("dimension-two battery") {
  InvariantBundle b;
  b.d = 2;
  b.e = ints({16, 6, 0});
  b.e_certified = true;
  b.length = 11;
  b.closure_length = 10;
  b.r = 2;
  b.rtilde = CertifiedValue{1, true};
  b.v = {6, 0, 0, 0};
  b.v_certified = true;
  b.cohen_macaulay = Status::Verified;
  auto t = check_thm22_equivalences(b);
  CHECK(t.status == "consistent");
  CHECK(t.c1 == true);
  CHECK(t.c2 == true);
  CHECK(t.c4 == false);

  b.rtilde = CertifiedValue{3, true};
  t = check_thm22_equivalences(b);
  CHECK(t.status == "violation");

  b.rtilde = CertifiedValue{1, false};
  CHECK(check_thm22_equivalences(b).status == "insufficient data");
  b.d = 3;
  CHECK(check_thm22_equivalences(b).status == "not applicable");
}
