#include "rednum/spec.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace rednum {

using nlohmann::json;

namespace {

mpz_class integer_from(const json& j, const std::string& key) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("expect." + key + ": not an integer");
    return v;
  }
  throw std::invalid_argument("expect." + key + ": expected an integer, a boolean or a list of integers");
}

Expectation expectation_from(const std::string& key, const json& j) {
  Expectation e;
  e.key = key;
  if (j.is_boolean()) {
    e.boolean = true;
    e.value.push_back(j.get<bool>() ? 1 : 0);
  } else if (j.is_array()) {
    e.list = true;
    for (const auto& x : j) e.value.push_back(integer_from(x, key));
  } else {
    e.value.push_back(integer_from(j, key));
  }
  return e;
}

json expectation_to(const Expectation& e) {
  if (e.boolean) return e.value.at(0) != 0;
  if (e.list) {
    json a = json::array();
    for (const auto& v : e.value) a.push_back(v.get_str());
    return a;
  }
  return e.value.at(0).get_str();
}

std::vector<std::string> strings(const json& j, const char* key) {
  if (!j.is_array()) throw std::invalid_argument(std::string(key) + ": expected a list of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw std::invalid_argument(std::string(key) + ": expected a list of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

IdealSpec parse_spec_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
  static const char* known[] = {"id",          "field",  "vars",   "relations", "generators", "reduction", "superficial",
                                "closure_witnesses", "expect", "asserted_properties"};
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw std::invalid_argument("unknown spec field '" + k + "'");
  }
  IdealSpec s;
  if (j.contains("id")) s.id = j.at("id").get<std::string>();
  if (j.contains("field")) {
    const json& f = j.at("field");
    if (f.is_string()) {
      s.field = f.get<std::string>();
    } else if (f.is_object() && f.contains("Fp")) {
      s.field = "Fp:" + (f.at("Fp").is_string() ? f.at("Fp").get<std::string>() : std::to_string(f.at("Fp").get<long long>()));
    } else {
      throw std::invalid_argument("field: expected \"Q\" or {\"Fp\": p}");
    }
  }
  if (!j.contains("vars") || !j.contains("generators")) throw std::invalid_argument("spec needs vars and generators");
  s.vars = strings(j.at("vars"), "vars");
  s.generators = strings(j.at("generators"), "generators");
  if (j.contains("relations")) s.relations = strings(j.at("relations"), "relations");
  if (j.contains("reduction")) s.reduction = strings(j.at("reduction"), "reduction");
  if (j.contains("superficial")) s.superficial = j.at("superficial").get<std::string>();
  if (j.contains("closure_witnesses")) s.closure_witnesses = strings(j.at("closure_witnesses"), "closure_witnesses");
  if (j.contains("expect")) {
    if (!j.at("expect").is_object()) throw std::invalid_argument("expect: expected an object");
    for (const auto& [k, v] : j.at("expect").items()) s.expect.push_back(expectation_from(k, v));
  }
  if (j.contains("asserted_properties")) {
    for (const auto& [k, v] : j.at("asserted_properties").items()) {
      if (!v.is_boolean()) throw std::invalid_argument("asserted_properties." + k + ": expected a boolean");
      if (k == "cohen_macaulay") s.asserted.cohen_macaulay = v.get<bool>();
      else if (k == "buchsbaum") s.asserted.buchsbaum = v.get<bool>();
      else if (k == "rr_depth_at_least_two") s.asserted.rr_depth_at_least_two = v.get<bool>();
      else throw std::invalid_argument("unknown asserted property '" + k + "'");
    }
  }
  return s;
}

std::string spec_to_json(const IdealSpec& s, int indent) {
  json j = json::object();
  if (!s.id.empty()) j["id"] = s.id;
  if (s.field.rfind("Fp:", 0) == 0) {
    j["field"] = {{"Fp", s.field.substr(3)}};
  } else {
    j["field"] = s.field;
  }
  j["vars"] = s.vars;
  if (!s.relations.empty()) j["relations"] = s.relations;
  j["generators"] = s.generators;
  if (s.reduction) j["reduction"] = *s.reduction;
  if (s.superficial) j["superficial"] = *s.superficial;
  if (!s.closure_witnesses.empty()) j["closure_witnesses"] = s.closure_witnesses;
  if (!s.expect.empty()) {
    json e = json::object();
    for (const auto& x : s.expect) e[x.key] = expectation_to(x);
    j["expect"] = e;
  }
  json a = json::object();
  if (s.asserted.cohen_macaulay) a["cohen_macaulay"] = true;
  if (s.asserted.buchsbaum) a["buchsbaum"] = true;
  if (s.asserted.rr_depth_at_least_two) a["rr_depth_at_least_two"] = true;
  if (!a.empty()) j["asserted_properties"] = a;
  return j.dump(indent);
}

namespace {

Expectation scalar(std::string key, long v) { return {std::move(key), {mpz_class(v)}, false, false}; }
Expectation flag(std::string key, bool v) { return {std::move(key), {mpz_class(v ? 1 : 0)}, true, false}; }
Expectation list(std::string key, std::vector<long> v) {
  Expectation e{std::move(key), {}, false, true};
  for (long x : v) e.value.emplace_back(x);
  return e;
}

IdealSpec ex34() {
  IdealSpec s;
  s.id = "ex3.4";
  s.vars = {"x", "y"};
  s.generators = {"x^4", "x^3*y", "x*y^3", "y^4"};
  s.reduction = std::vector<std::string>{"x^4", "y^4"};
  s.superficial = "x^4 + y^4";
  s.closure_witnesses = {"x^2*y^2"};
  s.expect = {scalar("e0", 16),           scalar("e1", 6),    scalar("r", 2),
              scalar("length", 11),       flag("superficial", true), scalar("r_mod_superficial", 2),
              flag("closure_witnesses", true)};
  return s;
}

IdealSpec ex35() {
  IdealSpec s;
  s.id = "ex3.5";
  s.vars = {"x", "y", "z"};
  s.generators = {"x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "x*z"};
  s.superficial = "23/6*x^2 + 1/2*x*y - 5/2*y^2 + 4/3*x*z + 1/3*y*z - 4/3*z^2";
  s.closure_witnesses = {"x^2"};
  s.expect = {scalar("e0", 8),      scalar("e1", 4),  scalar("e2", 0),         scalar("length", 5),
              scalar("r", 2),       scalar("rhs.B6", 2), flag("holds.B6", true), scalar("rhs.B2", 2),
              flag("superficial", true), flag("closure_witnesses", true)};
  return s;
}

IdealSpec ex39() {
  IdealSpec s;
  s.id = "ex3.9";
  s.vars = {"x", "y", "z", "u", "v", "w", "t"};
  s.relations = {"t^2", "t*u", "t*v", "t*w", "u*v", "u*w", "v*w", "u^3 - x*t", "v^3 - y*t", "w^3 - z*t"};
  s.generators = s.vars;
  s.reduction = std::vector<std::string>{"x", "y", "z"};
  s.asserted.cohen_macaulay = true;
  s.asserted.rr_depth_at_least_two = true;
  s.expect = {list("e", {8, 11, 4, 0}), scalar("r", 3),        scalar("rho", 3),       flag("depth_g.2", false),
              flag("depth_g.3", true),  scalar("type", 4),     scalar("mu", 7),        scalar("rhs.B3", 7),
              scalar("rhs.B5", 17),     scalar("rhs.B1", 19),  scalar("rhs.B10", 7),   scalar("rhs.B2", 5),
              scalar("length", 1)};
  return s;
}

IdealSpec ex43() {
  IdealSpec s;
  s.id = "ex4.3";
  s.vars = {"x", "y", "z"};
  s.generators = {"x^4", "y^4", "z^4", "x^3*y", "x*y^3", "y^3*z", "y*z^3"};
  s.closure_witnesses = {"x^2*y^2*z^2"};
  s.expect = {list("e", {64, 48, 4, 0}), scalar("r", 3),       scalar("length", 35),
              scalar("rhs.B5", 32),      scalar("rhs.B1", 43), flag("closure_witnesses", true)};
  return s;
}

IdealSpec ex26(unsigned m, unsigned d) {
  IdealSpec s = example_family_ring(m, d);
  s.id = "ex2.6(" + std::to_string(m) + "," + std::to_string(d) + ")";
  s.generators = s.vars;
  std::vector<std::string> q;
  for (unsigned j = 1; j <= d; ++j) q.push_back("z" + std::to_string(j));
  s.reduction = q;
  s.asserted.cohen_macaulay = true;
  std::vector<long> e = {static_cast<long>(m + 2 * d + 2), static_cast<long>(m + 3 * d + 2), static_cast<long>(d + 1)};
  if (d == 3) e.push_back(0);
  s.expect = {list("e", e), scalar("r", 3)};
  if (d == 2) {
    s.expect.push_back(flag("rtilde_lt_r", true));
    s.expect.push_back(flag("thm22.c4", false));
    s.expect.push_back(flag("thm22.plus_two_identity", false));
  } else {
    s.expect.push_back(scalar("rhs.B5", 17));
    s.expect.push_back(scalar("rhs.B1", 3 * static_cast<long>(m) + 19));
  }
  return s;
}

}  // namespace

IdealSpec example_family_ring(unsigned m, unsigned d) {
  IdealSpec s;
  std::vector<std::string> xy;
  for (unsigned j = 1; j <= m; ++j) xy.push_back("x" + std::to_string(j));
  xy.push_back("y");
  std::vector<std::string> v;
  std::vector<std::string> z;
  for (unsigned j = 1; j <= d; ++j) {
    v.push_back("v" + std::to_string(j));
    z.push_back("z" + std::to_string(j));
  }
  s.vars = xy;
  s.vars.insert(s.vars.end(), v.begin(), v.end());
  s.vars.insert(s.vars.end(), z.begin(), z.end());
  // (x, y) (x, y, v) + (v_i v_j, i != j) + (v_i^3 - z_i y)
  std::vector<std::string> xyv = xy;
  xyv.insert(xyv.end(), v.begin(), v.end());
  for (std::size_t a = 0; a < xy.size(); ++a) {
    for (std::size_t b = a; b < xyv.size(); ++b) s.relations.push_back(xy[a] + "*" + xyv[b]);
  }
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = i + 1; j < d; ++j) s.relations.push_back(v[i] + "*" + v[j]);
  }
  for (unsigned i = 0; i < d; ++i) s.relations.push_back(v[i] + "^3 - " + z[i] + "*y");
  return s;
}

std::vector<std::string> example_ids() {
  std::vector<std::string> ids;
  for (unsigned d = 2; d <= 3; ++d) {
    for (unsigned m = 0; m <= 2; ++m) ids.push_back("ex2.6(" + std::to_string(m) + "," + std::to_string(d) + ")");
  }
  ids.insert(ids.end(), {"ex3.4", "ex3.5", "ex3.9", "ex4.3"});
  return ids;
}

IdealSpec registry_example(const std::string& id) {
  if (id == "ex3.4") return ex34();
  if (id == "ex3.5") return ex35();
  if (id == "ex3.9") return ex39();
  if (id == "ex4.3") return ex43();
  for (unsigned d = 2; d <= 3; ++d) {
    for (unsigned m = 0; m <= 2; ++m) {
      if (id == "ex2.6(" + std::to_string(m) + "," + std::to_string(d) + ")") return ex26(m, d);
    }
  }
  throw std::out_of_range("unknown example id '" + id + "'");
}

}  // namespace rednum
