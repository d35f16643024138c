#include "json.hpp"

#include "rednum/analyze.hpp"

namespace rednum {

namespace {

using nlohmann::ordered_json;

ordered_json integers(const std::vector<mpz_class>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

ordered_json optional_integer(const std::optional<mpz_class>& v) {
  return v ? ordered_json(v->get_str()) : ordered_json(nullptr);
}

ordered_json polynomials(const std::vector<Polynomial>& ps) {
  ordered_json out = ordered_json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

ordered_json certified(const CertifiedValue& v) { return {{"value", v.value}, {"certified", v.certified}}; }

ordered_json observable(const Observable& o) {
  if (o.boolean) return o.value.front() != 0;
  if (o.list) return integers(o.value);
  return o.value.front().get_str();
}

ordered_json expected(const Expectation& e) {
  if (e.boolean) return e.value.front() != 0;
  if (e.list) return integers(e.value);
  return e.value.front().get_str();
}

ordered_json optional_bool(const std::optional<bool>& b) { return b ? ordered_json(*b) : ordered_json(nullptr); }

}  // namespace

std::string report_to_json(const AnalysisReport& rep, int indent) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kToolVersion;
  j["spec"] = ordered_json::parse(spec_to_json(rep.spec, -1));

  const auto& o = rep.options;
  ordered_json opts;
  opts["seed"] = std::to_string(o.seed);
  opts["cap"] = o.cap ? ordered_json(*o.cap) : ordered_json(nullptr);
  opts["horizon"] = o.horizon ? ordered_json(*o.horizon) : ordered_json(nullptr);
  opts["attempts"] = o.attempts;
  opts["samples"] = o.samples;
  opts["max_power"] = o.max_power;
  opts["order"] = o.order;
  opts["field"] = o.field ? ordered_json(*o.field) : ordered_json(nullptr);
  opts["superficial_quotient_check"] = o.superficial_quotient_check;
  j["options"] = opts;

  ordered_json stages = ordered_json::array();
  for (const auto& s : rep.stages) stages.push_back({{"name", s.name}, {"certified", s.certified}, {"message", s.message}});
  j["stages"] = stages;
  j["dimension"] = rep.dimension ? ordered_json(*rep.dimension) : ordered_json(nullptr);

  if (rep.hilbert) {
    const auto& h = *rep.hilbert;
    ordered_json values = ordered_json::array();
    for (auto v : h.values) values.push_back(std::to_string(v));
    j["hilbert"] = {{"values", values},
                    {"coefficients", integers(h.coefficients)},
                    {"postulation_index", h.postulation_index},
                    {"certified", h.certified},
                    {"cap_exceeded", h.cap_exceeded}};
  } else {
    j["hilbert"] = nullptr;
  }

  if (rep.reduction) {
    const auto& r = *rep.reduction;
    ordered_json trail = ordered_json::array();
    for (bool t : r.trail) trail.push_back(t);
    j["reduction"] = {{"verified", r.verified},
                      {"generators", polynomials(r.generators)},
                      {"r", r.r},
                      {"trail", trail},
                      {"cap", r.cap},
                      {"cap_from_vasconcelos", r.cap_from_vasconcelos},
                      {"attempt", r.attempts},
                      {"coefficient_bound", r.coefficient_bound},
                      {"samples", r.samples},
                      {"failure", r.failure}};
  } else {
    j["reduction"] = nullptr;
  }

  if (rep.filtration) {
    const auto& f = *rep.filtration;
    ordered_json rows = ordered_json::array();
    for (const auto& row : f.rows) {
      rows.push_back({{"n", row.n},
                      {"power_length", std::to_string(row.power_length)},
                      {"closure_length", std::to_string(row.closure_length)},
                      {"closed", row.closed},
                      {"certified", row.certified}});
    }
    ordered_json v = ordered_json::array();
    for (auto x : f.v) v.push_back(std::to_string(x));
    j["filtration"] = {{"horizon", f.horizon},
                       {"rows", rows},
                       {"rho", certified(f.rho)},
                       {"v", v},
                       {"rtilde", f.rtilde ? certified(*f.rtilde) : ordered_json(nullptr)}};
  } else {
    j["filtration"] = nullptr;
  }

  if (rep.superficial) {
    const auto& s = *rep.superficial;
    ordered_json cmp = ordered_json::array();
    for (const auto& [a, b] : s.comparison) cmp.push_back({a.get_str(), b.get_str()});
    j["superficial"] = {{"element", s.element.to_string()},
                        {"accepted", s.accepted},
                        {"comparison", cmp},
                        {"in_i_not_m_i", s.in_i_not_m_i},
                        {"failure", s.failure}};
  }
  if (rep.quotient_check) {
    const auto& q = *rep.quotient_check;
    j["superficial_quotient"] = {{"evaluated", q.evaluated},     {"message", q.message},
                                 {"element", q.element.to_string()}, {"reduction", polynomials(q.reduction)},
                                 {"r", q.r},                     {"r_quotient", q.r_quotient},
                                 {"consistent", q.consistent},   {"complete", q.complete},
                                 {"depth_bound_consistent", q.depth_bound_consistent}};
  }
  if (!rep.witnesses.empty()) {
    ordered_json w = ordered_json::array();
    for (bool x : rep.witnesses) w.push_back(x);
    j["closure_witnesses"] = w;
  }

  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.bounds.checks) {
    ordered_json hyps = ordered_json::array();
    for (const auto& h : c.hypotheses) hyps.push_back({{"name", h.name}, {"status", status_name(h.status)}});
    checks.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"hypotheses", hyps},
                      {"lhs", optional_integer(c.lhs)},
                      {"rhs", optional_integer(c.rhs)},
                      {"applicable", c.applicable},
                      {"satisfied", optional_bool(c.satisfied)},
                      {"holds", optional_bool(c.holds)},
                      {"open_case_failure", c.open_case_failure},
                      {"reason", c.reason}});
  }
  j["bounds"] = {{"verdict", rep.bounds.verdict}, {"checks", checks}};

  const auto& t = rep.thm22;
  j["dimension_two_battery"] = {{"status", t.status},
                                {"c1", optional_bool(t.c1)},
                                {"c2", optional_bool(t.c2)},
                                {"c3", optional_bool(t.c3)},
                                {"c4", optional_bool(t.c4)},
                                {"sum_v_is_e1", optional_bool(t.sum_v_is_e1)},
                                {"weighted_sum_v_is_e2", optional_bool(t.weighted_sum_v_is_e2)},
                                {"plus_two_identity", optional_bool(t.plus_two_identity)},
                                {"rtilde_equals_e2_identity", optional_bool(t.rtilde_equals_e2_identity)},
                                {"failures", t.failures}};

  ordered_json obs = ordered_json::object();
  for (const auto& [key, val] : rep.observables) obs[key] = {{"value", observable(val)}, {"certified", val.certified}};
  j["observables"] = obs;

  ordered_json exps = ordered_json::array();
  for (const auto& e : rep.expectations) {
    exps.push_back({{"key", e.key},
                    {"expected", expected(e.expected)},
                    {"computed", e.computed ? observable(*e.computed) : ordered_json(nullptr)},
                    {"status", e.status}});
  }
  j["expectations"] = exps;
  if (rep.options.timings) j["timings"] = rep.timings;
  j["error"] = rep.error;
  j["exit_code"] = rep.exit_code;
  return j.dump(indent);
}

}  // namespace rednum
