#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rednum/filtration.hpp"

namespace rednum {

enum class Status { Verified, UserAsserted, Unknown, Failed };

const char* status_name(Status s);

struct Hypothesis {
  std::string name;
  Status status = Status::Unknown;
};

/// Everything the bounds consume. Optional entries are absent when not
/// computed; the flags say whether computed entries are certified.
struct InvariantBundle {
  unsigned d = 0;
  std::vector<mpz_class> e;  // e_0..e_d
  bool e_certified = false;
  std::optional<mpz_class> length;          // lambda(R/I)
  std::optional<mpz_class> closure_length;  // lambda(R/~I)
  std::optional<unsigned> order;
  std::optional<unsigned> r;  // verified r_J(I)
  std::optional<CertifiedValue> rtilde;
  std::optional<CertifiedValue> rho;
  std::map<unsigned, CertifiedFlag> depth_flags;  // t -> depth G(I^t) > 0
  std::optional<std::size_t> cm_type;
  std::optional<std::size_t> mu;
  std::vector<mpz_class> e_of_j;  // e_i(J), for the Buchsbaum formulas
  bool e_of_j_certified = false;
  std::vector<std::size_t> v;  // v_n of the Ratliff-Rush filtration
  bool v_certified = false;
  bool is_maximal_ideal = false;
  Status cohen_macaulay = Status::Unknown;
  Status buchsbaum = Status::Unknown;
  /// depth G(~I^n filtration) >= 2; only ever user-asserted.
  Status rr_depth_at_least_two = Status::Unknown;
};

struct BoundCheck {
  std::string id;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  std::optional<mpz_class> lhs;
  std::optional<mpz_class> rhs;
  bool applicable = false;
  /// lhs <= rhs, whenever both sides are certified.
  std::optional<bool> satisfied;
  /// `satisfied`, reported only for applicable checks.
  std::optional<bool> holds;
  /// Failure of a bound whose status is open (Rossi's bound for d >= 3).
  bool open_case_failure = false;
  std::string reason;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  /// "consistent", "violation" (all hypotheses verified), "violation under
  /// asserted hypotheses", or "open-case failure".
  std::string verdict;
  bool violation() const { return verdict != "consistent"; }
};

/// Least t with depth G(I^t) > 0 certified, if any.
std::optional<unsigned> least_depth_t(const InvariantBundle& b);

BoundReport evaluate_bounds(const InvariantBundle& b);

/// Theorem battery in dimension 2: r~ <= e_2+1, the four conditions
/// (i) r~ = e_2+1, (ii) v_n = 0 for n != 0, e_2, (iii) v_{e_2} = 1,
/// (iv) e_1 = e_0 - lambda(R/~I) + 1, with (iv) => (iii) => (i) <=> (ii)
/// and all equivalent when e_2 != 0 ((i) <=> (ii) is skipped when ~I = J); the identities e_1 = sum v_n and
/// e_2 = sum n v_n; and, when r~ = e_2 != 0, the v pattern and
/// e_1 = e_0 - lambda(R/~I) + 2.
struct Thm22Verdict {
  /// "consistent", "violation", "insufficient data" or "not applicable".
  std::string status;
  std::optional<bool> c1, c2, c3, c4;
  std::optional<bool> sum_v_is_e1;
  std::optional<bool> weighted_sum_v_is_e2;
  /// e_1 = e_0 - lambda(R/~I) + 2, the identity forced by r~ = e_2.
  std::optional<bool> plus_two_identity;
  /// Evaluated only when r~ = e_2 != 0.
  std::optional<bool> rtilde_equals_e2_identity;
  std::vector<std::string> failures;
};

Thm22Verdict check_thm22_equivalences(const InvariantBundle& b);

}  // namespace rednum
