#include "rednum/bounds.hpp"

#include <numeric>

namespace rednum {

const char* status_name(Status s) {
  switch (s) {
    case Status::Verified:
      return "verified";
    case Status::UserAsserted:
      return "user-asserted";
    case Status::Unknown:
      return "unknown";
    case Status::Failed:
      return "failed";
  }
  return "unknown";
}

std::optional<unsigned> least_depth_t(const InvariantBundle& b) {
  for (const auto& [t, flag] : b.depth_flags) {
    if (flag.certified && flag.value) return t;
  }
  return std::nullopt;
}

namespace {

Status from_bool(bool ok) { return ok ? Status::Verified : Status::Failed; }

Status depth_status(const InvariantBundle& b, unsigned t) {
  const auto it = b.depth_flags.find(t);
  if (it == b.depth_flags.end() || !it->second.certified) return Status::Unknown;
  return from_bool(it->second.value);
}

// Collects ingredients and hypotheses of one check, then settles the verdict.
class Check {
 public:
  Check(std::string id, std::string statement) {
    c_.id = std::move(id);
    c_.statement = std::move(statement);
  }

  void hypothesis(std::string name, Status s) { c_.hypotheses.push_back({std::move(name), s}); }

  // Records a missing ingredient; returns `ok` so callers can guard rhs.
  bool need(bool ok, const std::string& what) {
    if (!ok && missing_.empty()) missing_ = what;
    return ok;
  }

  void lhs(const mpz_class& v) { c_.lhs = v; }
  void rhs(const mpz_class& v) { c_.rhs = v; }
  void note(std::string reason) { note_ = std::move(reason); }

  BoundCheck finish() {
    if (missing_.empty() && c_.lhs && c_.rhs) c_.satisfied = *c_.lhs <= *c_.rhs;
    std::string why;
    for (const auto& h : c_.hypotheses) {
      if (h.status == Status::Failed) {
        why = "hypothesis fails: " + h.name;
        break;
      }
      if (h.status == Status::Unknown && why.empty()) why = "hypothesis unknown: " + h.name;
    }
    if (!missing_.empty()) why = "uncertified ingredient " + missing_;
    c_.applicable = why.empty() && c_.satisfied.has_value();
    if (c_.applicable) {
      c_.holds = c_.satisfied;
      c_.reason = note_;
    } else {
      c_.reason = why.empty() ? note_ : why;
    }
    return std::move(c_);
  }

 private:
  BoundCheck c_;
  std::string missing_;
  std::string note_;
};

struct Basics {
  bool ok = false;
  mpz_class base;  // e_1 - e_0 + lambda(R/I)
};

Basics basics(const InvariantBundle& b, Check& c) {
  Basics out;
  const bool e_ok = c.need(b.e_certified && b.e.size() >= 2, "e_0, e_1");
  const bool l_ok = c.need(b.length.has_value(), "lambda(R/I)");
  const bool r_ok = c.need(b.r.has_value(), "r_J(I)");
  if (r_ok) c.lhs(*b.r);
  if (e_ok && l_ok) {
    out.ok = true;
    out.base = b.e[1] - b.e[0] + *b.length;
  }
  return out;
}

mpz_class coefficient(const InvariantBundle& b, std::size_t i) { return i < b.e.size() ? b.e[i] : mpz_class(0); }

BoundCheck vasconcelos(const InvariantBundle& b) {
  Check c("B1", "r_J(I) <= floor(d e_0 / o(I)) - 2d + 1");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d >= 1", from_bool(b.d >= 1));
  const bool e_ok = c.need(b.e_certified && !b.e.empty(), "e_0");
  const bool o_ok = c.need(b.order.has_value(), "o(I)");
  if (c.need(b.r.has_value(), "r_J(I)")) c.lhs(*b.r);
  if (e_ok && o_ok && b.d >= 1) {
    mpz_class q;
    mpz_fdiv_q_ui(q.get_mpz_t(), mpz_class(b.d * b.e[0]).get_mpz_t(), *b.order);
    c.rhs(q - 2 * b.d + 1);
  }
  return c.finish();
}

BoundCheck rossi(const InvariantBundle& b) {
  Check c("B2", "r_J(I) <= e_1 - e_0 + lambda(R/I) + 1");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d >= 1", from_bool(b.d >= 1));
  if (b.d == 3) {
    const bool rho_ok = b.rho && b.rho->certified && b.r && b.rho->value + 1 <= *b.r;
    const bool e_zero = b.e_certified && b.e.size() == 4 && b.e[2] == 0 && b.e[3] == 0;
    Status s = Status::Unknown;
    if (rho_ok || e_zero) {
      s = Status::Verified;
    } else if (b.rr_depth_at_least_two == Status::UserAsserted || b.rr_depth_at_least_two == Status::Verified) {
      s = b.rr_depth_at_least_two;
    }
    c.hypothesis("rho(I) <= r_J(I) - 1, or e_2 = e_3 = 0, or depth G(~I^n filtration) >= 2", s);
    if (rho_ok) c.note("rho(I) <= r_J(I) - 1");
    else if (e_zero) c.note("e_2 = e_3 = 0");
  } else if (b.d > 3) {
    c.hypothesis("known case in dimension > 3", Status::Unknown);
  }
  const Basics base = basics(b, c);
  if (base.ok) c.rhs(base.base + 1);
  BoundCheck out = c.finish();
  // In dimension >= 3 the bound is open in general; a failure there is a
  // research event rather than a contradiction.
  out.open_case_failure = b.d >= 3 && !out.applicable && out.satisfied == false &&
                          b.cohen_macaulay != Status::Failed && b.cohen_macaulay != Status::Unknown;
  return out;
}

BoundCheck depth_t_bound(const InvariantBundle& b) {
  Check c("B3", "d = 3, depth G(I^t) > 0: r_J(I) <= e_1 - e_0 + lambda(R/I) + t");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 3", from_bool(b.d == 3));
  const auto t = least_depth_t(b);
  c.hypothesis("depth G(I^t) > 0 for some t", t ? Status::Verified : Status::Unknown);
  const Basics base = basics(b, c);
  if (base.ok && t) {
    c.rhs(base.base + *t);
    c.note("t = " + std::to_string(*t));
  }
  return c.finish();
}

BoundCheck depth_t_refinement(const InvariantBundle& b) {
  Check c("B3-mod", "d = 3, depth G(I^t) > 0, r_J(I) = k mod t, 1 <= k <= t-1: r_J(I) <= e_1 - e_0 + lambda(R/I) + k");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 3", from_bool(b.d == 3));
  // The tightest k over all certified t.
  std::optional<unsigned> best_t;
  std::optional<unsigned> best_k;
  bool any_t = false;
  if (b.r) {
    for (const auto& [t, flag] : b.depth_flags) {
      if (!flag.certified || !flag.value) continue;
      any_t = true;
      const unsigned k = *b.r % t;
      if (t < 2 || k == 0) continue;
      if (!best_k || k < *best_k) {
        best_k = k;
        best_t = t;
      }
    }
  }
  c.hypothesis("depth G(I^t) > 0 for some t", any_t ? Status::Verified : Status::Unknown);
  c.hypothesis("r_J(I) = k mod t with 1 <= k <= t-1", best_k ? Status::Verified : (any_t ? Status::Failed : Status::Unknown));
  const Basics base = basics(b, c);
  if (base.ok && best_k) {
    c.rhs(base.base + *best_k);
    c.note("t = " + std::to_string(*best_t) + ", k = " + std::to_string(*best_k));
  }
  return c.finish();
}

BoundCheck odd_case(const InvariantBundle& b) {
  Check c("B4", "d = 3, depth G(I^2) > 0, r_J(I) odd: r_J(I) <= e_1 - e_0 + lambda(R/I) + 1");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 3", from_bool(b.d == 3));
  c.hypothesis("depth G(I^2) > 0", depth_status(b, 2));
  c.hypothesis("r_J(I) odd", b.r ? from_bool(*b.r % 2 == 1) : Status::Unknown);
  const Basics base = basics(b, c);
  if (base.ok) c.rhs(base.base + 1);
  return c.finish();
}

BoundCheck quadratic(const InvariantBundle& b) {
  Check c("B5", "d >= 3, depth G(I) >= d-3: r_J(I) <= e_1 - e_0 + lambda(R/I) + 1 + (e_2 - 1) e_2 - e_3");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d >= 3", from_bool(b.d >= 3));
  Status depth = Status::Unknown;
  if (b.d == 3) depth = Status::Verified;
  else if (b.d == 4) depth = depth_status(b, 1);
  if (b.d >= 3) c.hypothesis("depth G(I) >= d - 3", depth);
  const Basics base = basics(b, c);
  if (base.ok && b.d >= 3 && c.need(b.e.size() >= 4, "e_2, e_3")) {
    const mpz_class e2 = b.e[2];
    c.rhs(base.base + 1 + (e2 - 1) * e2 - b.e[3]);
  }
  return c.finish();
}

BoundCheck small_e2(const InvariantBundle& b) {
  Check c("B6", "d = 3: e_2 in {0, 1} gives r <= e_1 - e_0 + lambda(R/I) + 1 - e_3; e_2 = 2 gives r(I) <= e_1 - e_0 + lambda(R/I) + 2 - e_3");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 3", from_bool(b.d == 3));
  const bool e_ok = b.e_certified && b.e.size() == 4;
  const mpz_class e2 = coefficient(b, 2);
  c.hypothesis("e_2 in {0, 1, 2}", e_ok ? from_bool(e2 >= 0 && e2 <= 2) : Status::Unknown);
  const Basics base = basics(b, c);
  if (base.ok && e_ok && e2 >= 0 && e2 <= 2) {
    c.rhs(base.base + (e2 == 2 ? 2 : 1) - b.e[3]);
  }
  BoundCheck out = c.finish();
  // For e_2 = 2 the statement bounds r(I), the least reduction number over
  // all J, which the sampled r_J(I) only bounds from above.
  if (e_ok && e2 == 2 && out.applicable && out.holds == false) {
    out.applicable = false;
    out.holds.reset();
    out.reason = "e_2 = 2 bounds r(I), which may lie below the sampled r_J(I)";
  }
  return out;
}

BoundCheck rtilde_e2(const InvariantBundle& b) {
  Check c("B7", "d = 2: r~_J(I) <= e_2 + 1");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 2", from_bool(b.d == 2));
  if (c.need(b.rtilde && b.rtilde->certified, "r~_J(I)")) c.lhs(b.rtilde->value);
  if (c.need(b.e_certified && b.e.size() >= 3, "e_2")) c.rhs(b.e[2] + 1);
  return c.finish();
}

BoundCheck rtilde_r(const InvariantBundle& b) {
  Check c("B8", "d = 2: r~_J(I) <= r_J(I)");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 2", from_bool(b.d == 2));
  if (c.need(b.rtilde && b.rtilde->certified, "r~_J(I)")) c.lhs(b.rtilde->value);
  if (c.need(b.r.has_value(), "r_J(I)")) c.rhs(*b.r);
  return c.finish();
}

BoundCheck buchsbaum(const InvariantBundle& b) {
  Check c("B9",
          "Buchsbaum, d = 1: r_J(I) <= e_1 - e_1(J) - e_0 + lambda(R/I) + 2; d = 2, depth G(I^t) > 0: r_J(I) <= e_1 - "
          "e_1(J) - e_0 + lambda(R/I) + t + 1");
  c.hypothesis("Buchsbaum", b.buchsbaum);
  c.hypothesis("d in {1, 2}", from_bool(b.d == 1 || b.d == 2));
  const auto t = least_depth_t(b);
  if (b.d == 2) c.hypothesis("depth G(I^t) > 0 for some t", t ? Status::Verified : Status::Unknown);
  const Basics base = basics(b, c);
  const bool ej = c.need(b.e_of_j_certified && b.e_of_j.size() >= 2, "e_1(J)");
  if (base.ok && ej) {
    if (b.d == 1) c.rhs(base.base - b.e_of_j[1] + 2);
    if (b.d == 2 && t) {
      c.rhs(base.base - b.e_of_j[1] + *t + 1);
      c.note("t = " + std::to_string(*t));
    }
  }
  return c.finish();
}

BoundCheck boundary_type(const InvariantBundle& b) {
  Check c("B10", "d = 3, I = m, e_2 = e_1 - e_0 + 1 != 0, type R = e_0 - mu(m) + d: r_J(m) <= e_1 - e_0 + lambda(R/m) + 3");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d = 3", from_bool(b.d == 3));
  c.hypothesis("I = m", from_bool(b.is_maximal_ideal));
  const bool e_ok = b.e_certified && b.e.size() >= 3;
  c.hypothesis("e_2 = e_1 - e_0 + 1 != 0",
               e_ok ? from_bool(b.e[2] == b.e[1] - b.e[0] + 1 && b.e[2] != 0) : Status::Unknown);
  Status type = Status::Unknown;
  if (e_ok && b.cm_type && b.mu) {
    type = from_bool(mpz_class(*b.cm_type) == b.e[0] - *b.mu + b.d);
  }
  c.hypothesis("type R = e_0 - mu(m) + d", type);
  const Basics base = basics(b, c);
  if (base.ok) c.rhs(base.base + 3);
  return c.finish();
}

BoundCheck sum_v_diagnostic(const InvariantBundle& b) {
  Check c("SV", "r_J(I) <= sum_n v_n(~I^n filtration) - e_0 + lambda(R/I) + 1");
  c.hypothesis("Cohen-Macaulay", b.cohen_macaulay);
  c.hypothesis("d >= 1", from_bool(b.d >= 1));
  const bool v_ok = c.need(b.v_certified, "v_n");
  const bool e_ok = c.need(b.e_certified && !b.e.empty(), "e_0");
  const bool l_ok = c.need(b.length.has_value(), "lambda(R/I)");
  if (c.need(b.r.has_value(), "r_J(I)")) c.lhs(*b.r);
  if (v_ok && e_ok && l_ok) {
    mpz_class sum = 0;
    for (std::size_t x : b.v) sum += x;
    c.rhs(sum - b.e[0] + *b.length + 1);
  }
  return c.finish();
}

}  // namespace

BoundReport evaluate_bounds(const InvariantBundle& b) {
  BoundReport report;
  report.checks = {vasconcelos(b), rossi(b),     depth_t_bound(b), depth_t_refinement(b),
                   odd_case(b),    quadratic(b), small_e2(b),      rtilde_e2(b),
                   rtilde_r(b),    buchsbaum(b), boundary_type(b), sum_v_diagnostic(b)};
  report.verdict = "consistent";
  bool open_failure = false;
  for (const auto& c : report.checks) {
    open_failure = open_failure || c.open_case_failure;
    if (c.holds != false) continue;
    bool all_verified = true;
    for (const auto& h : c.hypotheses) all_verified = all_verified && h.status == Status::Verified;
    if (all_verified) {
      report.verdict = "violation";
      return report;
    }
    report.verdict = "violation under asserted hypotheses";
  }
  if (report.verdict == "consistent" && open_failure) report.verdict = "open-case failure";
  return report;
}

Thm22Verdict check_thm22_equivalences(const InvariantBundle& b) {
  Thm22Verdict out;
  if (b.d != 2) {
    out.status = "not applicable";
    return out;
  }
  if (!b.e_certified || b.e.size() != 3 || !b.v_certified || !b.rtilde || !b.rtilde->certified ||
      !b.closure_length) {
    out.status = "insufficient data";
    return out;
  }
  const mpz_class& e0 = b.e[0];
  const mpz_class& e1 = b.e[1];
  const mpz_class& e2 = b.e[2];
  const mpz_class rt = b.rtilde->value;
  auto v_at = [&](const mpz_class& n) -> std::size_t {
    if (n < 0 || n >= static_cast<long>(b.v.size())) return 0;
    return b.v[n.get_ui()];
  };

  mpz_class sum = 0;
  mpz_class weighted = 0;
  bool pattern = true;
  for (std::size_t n = 0; n < b.v.size(); ++n) {
    sum += b.v[n];
    weighted += mpz_class(n) * b.v[n];
    if (n != 0 && mpz_class(n) != e2 && b.v[n] != 0) pattern = false;
  }
  out.sum_v_is_e1 = sum == e1;
  out.weighted_sum_v_is_e2 = weighted == e2;
  out.c1 = rt == e2 + 1;
  out.c2 = pattern;
  out.c3 = v_at(e2) == 1;
  out.c4 = e1 == e0 - *b.closure_length + 1;
  out.plus_two_identity = e1 == e0 - *b.closure_length + 2;

  auto fail = [&](bool ok, const char* what) {
    if (!ok) out.failures.emplace_back(what);
  };
  fail(rt <= e2 + 1, "r~ <= e_2 + 1");
  fail(*out.sum_v_is_e1, "e_1 = sum v_n");
  fail(*out.weighted_sum_v_is_e2, "e_2 = sum n v_n");
  fail(!*out.c4 || *out.c3, "(iv) => (iii)");
  fail(!*out.c3 || *out.c1, "(iii) => (i)");
  // (ii) => (i) needs ~I != J, i.e. v_0 != 0.
  const bool closure_is_j = !b.v.empty() && b.v[0] == 0;
  if (!closure_is_j) fail(*out.c1 == *out.c2, "(i) <=> (ii)");
  if (e2 != 0) fail(*out.c1 == *out.c3 && *out.c3 == *out.c4, "(i)-(iv) equivalent when e_2 != 0");
  if (rt == e2 && e2 != 0) {
    bool zeros = true;
    for (std::size_t n = 0; n < b.v.size(); ++n) {
      const mpz_class nn = n;
      if (n != 0 && n != 1 && nn != e2 - 1 && b.v[n] != 0) zeros = false;
    }
    bool lengths = e2 == 2 ? v_at(1) == 2 : (v_at(1) == 1 && v_at(e2 - 1) == 1);
    const bool identity = e1 == e0 - *b.closure_length + 2;
    out.rtilde_equals_e2_identity = zeros && lengths && identity;
    fail(*out.rtilde_equals_e2_identity, "r~ = e_2 forces the v pattern and e_1 = e_0 - lambda(R/~I) + 2");
  }
  out.status = out.failures.empty() ? "consistent" : "violation";
  return out;
}

}  // namespace rednum
