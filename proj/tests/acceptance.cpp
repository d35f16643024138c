// Acceptance criteria 1-9: one PASS/FAIL line each, exact integer equality.
//
//   acceptance                       all criteria in one process
//   acceptance --criterion N         one criterion (9 re-runs 1-8)
//   acceptance --digest-dir DIR      store (1-8) or compare against (9)
//                                    the reports of each criterion

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "rednum/analyze.hpp"
#include "rednum/parser.hpp"
#include "rednum/search.hpp"

using namespace rednum;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string detail;
  std::string digest;  // every report produced, for the determinism check

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& computed, const B& expected, const std::string& what) {
    std::ostringstream ss;
    ss << what << " = " << computed << ", expected " << expected;
    expect(computed == expected, ss.str());
  }
};

// Observable as text: "16", "(8,11,4,0)", "true"; "missing" when absent,
// "uncertified" when not certified.
std::string observed(const AnalysisReport& rep, const std::string& key) {
  const auto it = rep.observables.find(key);
  if (it == rep.observables.end()) return "missing";
  const Observable& o = it->second;
  if (!o.certified) return "uncertified";
  if (o.boolean) return o.value.front() != 0 ? "true" : "false";
  if (!o.list) return o.value.front().get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < o.value.size(); ++i) s += (i ? "," : "") + o.value[i].get_str();
  return s + ")";
}

std::optional<mpz_class> bound_rhs(const AnalysisReport& rep, const std::string& id) {
  for (const auto& c : rep.bounds.checks) {
    if (c.id == id) return c.rhs;
  }
  return std::nullopt;
}

std::string text(const std::optional<mpz_class>& v) { return v ? v->get_str() : "missing"; }

// lambda(R/I) for a monomial ideal by standard-monomial enumeration.
std::size_t staircase_length(const IdealSpec& spec, unsigned bound) {
  const RingRef ring = make_ring(Field::rationals(), spec.vars);
  std::vector<Monomial> gens;
  for (const auto& g : spec.generators) {
    const Polynomial p = parse_polynomial(g, ring);
    if (p.size() != 1) throw std::logic_error("staircase oracle needs monomial generators");
    gens.push_back(p.leading_monomial());
  }
  std::size_t count = 0;
  for (const auto& u : oracle::monomials_below(spec.vars.size(), bound)) {
    bool inside = false;
    for (const auto& g : gens) inside = inside || g.divides(u);
    count += !inside;
  }
  return count;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

AnalysisReport run(const IdealSpec& spec, Outcome& out, AnalyzeOptions options = {}) {
  AnalysisReport rep = analyze(spec, options);
  out.digest += report_to_json(rep) + "\n";
  if (!rep.error.empty()) out.failures.push_back(spec.id + ": " + rep.error);
  return rep;
}

Outcome criterion1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const IdealSpec spec = registry_example("ex3.4");
  const AnalysisReport rep = run(spec, out);
  out.equal(observed(rep, "e0"), "16", "e0");
  out.equal(observed(rep, "e1"), "6", "e1");
  out.expect(spec.reduction == std::vector<std::string>{"x^4", "y^4"}, "J = (x^4, y^4)");
  out.equal(observed(rep, "r"), "2", "r_J");
  out.expect(rep.witnesses == std::vector<bool>{true} && observed(rep, "closure_witnesses") == "true",
             "x^2*y^2 in ~I \\ I");
  out.equal(observed(rep, "length"), std::to_string(staircase_length(spec, 10)), "lambda(R/I) vs staircase");
  out.equal(observed(rep, "length"), "11", "lambda(R/I)");
  out.expect(spec.superficial == std::string("x^4 + y^4") && rep.superficial && rep.superficial->accepted,
             "x^4 + y^4 is superficial");
  const double s = seconds_since(start);
  out.expect(s <= 10, "runtime " + std::to_string(s) + " s > 10 s");
  out.detail = "e=" + observed(rep, "e") + " r=" + observed(rep, "r") + " lambda=" + observed(rep, "length");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const IdealSpec spec = registry_example("ex3.5");
  const AnalysisReport rep = run(spec, out);
  out.equal(observed(rep, "e0"), "8", "e0");
  out.equal(observed(rep, "e1"), "4", "e1");
  out.equal(observed(rep, "e2"), "0", "e2");
  const RingRef ring = make_ring(Field::rationals(), spec.vars);
  std::vector<Polynomial> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_polynomial(g, ring));
  out.equal(observed(rep, "length"), std::to_string(oracle::truncated_length(gens, 3, 6)),
            "lambda(R/I) vs truncated counting");
  out.equal(observed(rep, "length"), "5", "lambda(R/I)");
  out.expect(!spec.reduction.has_value(), "reduction is searched, not given");
  out.equal(observed(rep, "r"), "2", "r_J of the found reduction");
  const BoundCheck* b6 = nullptr;
  for (const auto& c : rep.bounds.checks) {
    if (c.id == "B6") b6 = &c;
  }
  out.expect(b6 && b6->applicable && b6->holds == true, "B6 applicable and holding");
  if (b6) {
    out.equal(text(b6->rhs), "2", "B6 rhs");
    out.equal(text(b6->lhs), text(b6->rhs), "B6 equality");
  }
  const double s = seconds_since(start);
  out.expect(s <= 30, "runtime " + std::to_string(s) + " s > 30 s");
  out.detail = "e=" + observed(rep, "e") + " r=" + observed(rep, "r") + " B6 rhs=" + text(bound_rhs(rep, "B6"));
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const IdealSpec spec = registry_example("ex3.9");
  const AnalysisReport rep = run(spec, out);
  out.equal(observed(rep, "e"), "(8,11,4,0)", "e");
  out.expect(spec.reduction == std::vector<std::string>{"x", "y", "z"}, "J = (x, y, z)");
  out.equal(observed(rep, "r"), "3", "r_J");
  out.equal(observed(rep, "rho"), "3", "rho");
  out.equal(observed(rep, "depth_g.3"), "true", "depth G(m^3) > 0");
  out.equal(observed(rep, "depth_g.2"), "false", "depth G(m^2) > 0");
  out.equal(observed(rep, "type"), "4", "type");
  out.equal(observed(rep, "mu"), "7", "mu");
  const std::vector<std::pair<std::string, std::string>> rhs = {{"B3", "7"}, {"B5", "17"}, {"B1", "19"}, {"B10", "7"}};
  for (const auto& [id, v] : rhs) out.equal(text(bound_rhs(rep, id)), v, id + " rhs");
  const double s = seconds_since(start);
  out.expect(s <= 600, "runtime " + std::to_string(s) + " s > 600 s");
  out.detail = "e=" + observed(rep, "e") + " r=" + observed(rep, "r") + " rho=" + observed(rep, "rho") +
               " rhs B3/B5/B1/B10=" + text(bound_rhs(rep, "B3")) + "/" + text(bound_rhs(rep, "B5")) + "/" +
               text(bound_rhs(rep, "B1")) + "/" + text(bound_rhs(rep, "B10"));
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const IdealSpec spec = registry_example("ex4.3");
  const AnalysisReport rep = run(spec, out);
  out.equal(observed(rep, "e"), "(64,48,4,0)", "e");
  out.expect(!spec.reduction.has_value(), "reduction is searched, not given");
  out.equal(observed(rep, "r"), "3", "r_J of the found reduction");
  out.equal(observed(rep, "length"), std::to_string(staircase_length(spec, 16)), "lambda(R/I) vs staircase");
  out.equal(observed(rep, "length"), "35", "lambda(R/I)");
  out.equal(text(bound_rhs(rep, "B5")), "32", "B5 rhs");
  out.equal(text(bound_rhs(rep, "B1")), "43", "B1 rhs");
  const double s = seconds_since(start);
  out.expect(s <= 300, "runtime " + std::to_string(s) + " s > 300 s");
  out.detail = "e=" + observed(rep, "e") + " r=" + observed(rep, "r") + " lambda=" + observed(rep, "length") +
               " rhs B5/B1=" + text(bound_rhs(rep, "B5")) + "/" + text(bound_rhs(rep, "B1"));
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (const auto& [m, d] : std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {0, 3}}) {
    const auto start = std::chrono::steady_clock::now();
    const std::string id = "ex2.6(" + std::to_string(m) + "," + std::to_string(d) + ")";
    const AnalysisReport rep = run(registry_example(id), out);
    const std::string tail = d == 3 ? ",0)" : ")";
    out.equal(observed(rep, "e"),
              "(" + std::to_string(m + 2 * d + 2) + "," + std::to_string(m + 3 * d + 2) + "," + std::to_string(d + 1) +
                  tail,
              id + " e");
    out.equal(observed(rep, "r"), "3", id + " r_Q");
    if (d == 2) {
      out.equal(observed(rep, "rtilde_lt_r"), "true", id + " r~_Q < r_Q");
      out.equal(observed(rep, "thm22.c4"), "false", id + " condition (iv)");
      out.equal(observed(rep, "thm22.plus_two_identity"), "false", id + " e1 = e0 - lambda(R/~m) + 2");
    }
    const double s = seconds_since(start);
    out.expect(s <= 600, id + " runtime " + std::to_string(s) + " s > 600 s");
    out.detail += id + ": e=" + observed(rep, "e") + " r=" + observed(rep, "r") +
                  (d == 2 ? " r~=" + observed(rep, "rtilde") : "") + "; ";
  }
  return out;
}

struct Tally {
  unsigned trials = 0;
  unsigned violations = 0;
  unsigned uncertified = 0;
  std::vector<std::string> notes;
  void violation(unsigned trial, const std::string& what) {
    ++violations;
    if (notes.size() < 8) notes.push_back("trial " + std::to_string(trial) + ": " + what);
  }
  void missing(unsigned trial, const std::string& what) {
    ++uncertified;
    if (notes.size() < 8) notes.push_back("trial " + std::to_string(trial) + " uncertified: " + what);
  }
};

void close_tally(Outcome& out, const Tally& t, double seconds, double budget) {
  out.expect(t.violations == 0, std::to_string(t.violations) + " violations");
  out.expect(t.uncertified == 0, std::to_string(t.uncertified) + " trials without certified data");
  out.expect(seconds <= budget, "runtime " + std::to_string(seconds) + " s > " + std::to_string(budget) + " s");
  for (const auto& n : t.notes) out.failures.push_back(n);
}

Outcome criterion6() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  SearchConfig config;
  config.seed = 42;
  config.trials = 200;
  config.vars = 2;
  config.max_deg = 5;
  const SearchSummary summary = search_counterexamples(config);
  out.digest += search_log(summary);
  Tally tally;
  for (const auto& t : summary.trials) {
    out.digest += report_to_json(t.report, -1) + "\n";
    ++tally.trials;
    const InvariantBundle& b = t.report.bundle;
    if (!b.r || !b.rtilde || !b.rtilde->certified || !b.e_certified || b.e.size() != 3 || !b.v_certified ||
        !b.length) {
      tally.missing(t.index, "r, r~, e, v or lambda");
      continue;
    }
    const mpz_class r = *b.r;
    const mpz_class rt = b.rtilde->value;
    mpz_class sum = 0;
    mpz_class weighted = 0;
    for (std::size_t n = 0; n < b.v.size(); ++n) {
      sum += b.v[n];
      weighted += mpz_class(n) * b.v[n];
    }
    if (rt > r) tally.violation(t.index, "r~ > r");
    if (rt > b.e[2] + 1) tally.violation(t.index, "r~ > e2 + 1");
    if (sum != b.e[1]) tally.violation(t.index, "e1 != sum v_n");
    if (weighted != b.e[2]) tally.violation(t.index, "e2 != sum n v_n");
    if (r > b.e[1] - b.e[0] + *b.length + 1) tally.violation(t.index, "r > e1 - e0 + lambda + 1");
  }
  const double s = seconds_since(start);
  close_tally(out, tally, s, 1200);
  out.detail = std::to_string(tally.trials) + " ideals, " + std::to_string(tally.violations) + " violations, " +
               std::to_string(summary.near_equalities) + " near-equalities, " + std::to_string(static_cast<int>(s)) +
               " s";
  return out;
}

Outcome criterion7() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  SearchConfig config;
  config.seed = 42;
  config.trials = 100;
  config.vars = 3;
  config.max_deg = 4;
  config.superficial_quotient_check = true;
  const SearchSummary summary = search_counterexamples(config);
  out.digest += search_log(summary);
  Tally tally;
  unsigned rho_checked = 0;
  unsigned mod_checked = 0;
  unsigned drops = 0;
  for (const auto& t : summary.trials) {
    out.digest += report_to_json(t.report, -1) + "\n";
    ++tally.trials;
    const InvariantBundle& b = t.report.bundle;
    if (!b.r || !b.e_certified || b.e.size() != 4 || !b.length) {
      tally.missing(t.index, "r, e or lambda");
      continue;
    }
    const mpz_class r = *b.r;
    const mpz_class base = b.e[1] - b.e[0] + *b.length;
    if (r > base + 1 + (b.e[2] - 1) * b.e[2] - b.e[3]) tally.violation(t.index, "B5");
    if (b.rho && b.rho->certified) {
      ++rho_checked;
      if (r > base + b.rho->value) tally.violation(t.index, "B3 with t = rho");
    }
    for (const auto& [tt, flag] : b.depth_flags) {
      if (!flag.certified || !flag.value || tt < 2) continue;
      const unsigned k = *b.r % tt;
      if (k == 0) continue;
      ++mod_checked;
      if (r > base + k) tally.violation(t.index, "mod-t refinement, t = " + std::to_string(tt));
    }
    const auto& q = t.report.quotient_check;
    if (!q || !q->evaluated || !q->complete) {
      tally.missing(t.index, "superficial quotient check");
      continue;
    }
    if (q->r_quotient < q->r) {
      ++drops;
      if (!q->consistent) tally.violation(t.index, "closed power in [r_quotient, r)");
    }
  }
  const double s = seconds_since(start);
  close_tally(out, tally, s, 3600);
  out.detail = std::to_string(tally.trials) + " ideals, " + std::to_string(tally.violations) + " violations, rho " +
               std::to_string(rho_checked) + ", mod-t " + std::to_string(mod_checked) + ", r drops " +
               std::to_string(drops) + ", " + std::to_string(static_cast<int>(s)) + " s";
  return out;
}

Outcome criterion8() {
  Outcome out;
  unsigned agreed_lengths = 0;
  unsigned agreed_closures = 0;
  for (unsigned i = 0; i < 50; ++i) {
    SearchConfig config;
    config.seed = 8;
    config.vars = i % 2 == 0 ? 2 : 3;
    config.max_deg = config.vars == 2 ? 4 : 3;
    config.max_gens = 3;
    config.family = i % 4 < 2 ? IdealFamily::Monomial : IdealFamily::Binomial;
    const IdealSpec spec = random_ideal_spec(config, i);
    const ParsedSpec parsed = parse_spec_ideal(spec);
    const Ideal& ideal = parsed.ideal;
    const std::string tag = "ideal " + std::to_string(i) + " " + spec_to_json(spec, -1);

    // Pure powers x_i^{a_i} put every monomial of degree sum(a_i - 1) + 1 in I.
    unsigned bound = 1;
    for (std::size_t v = 0; v < spec.vars.size(); ++v) bound += config.max_deg - 1;
    const std::size_t oracle_length = oracle::truncated_length(ideal.generators(), spec.vars.size(), bound);
    const std::size_t length = ideal.quotient_length();
    out.digest += tag + " length " + std::to_string(length) + "\n";
    if (length == oracle_length) {
      ++agreed_lengths;
    } else {
      out.failures.push_back(tag + ": length " + std::to_string(length) + " vs " + std::to_string(oracle_length));
    }

    const auto red = find_minimal_reduction(ideal, static_cast<unsigned>(spec.vars.size()), derive_seed(8, i), 24, 20);
    if (!red.verified) {
      out.failures.push_back(tag + ": no reduction found (" + red.failure + ")");
      continue;
    }
    bool all = true;
    for (unsigned n = 1; n <= 2; ++n) {
      const ClosureResult chain = ratliff_rush_power(ideal, n);
      const ClosureResult formula = ratliff_rush_by_reduction(ideal, red.generators, n);
      out.digest += tag + " closure " + std::to_string(n) + " " + chain.ideal.to_string() + "\n";
      if (!chain.certified || !formula.certified) {
        out.failures.push_back(tag + ": closure " + std::to_string(n) + " not certified");
        all = false;
      } else if (!ideal_equal(chain.ideal, formula.ideal)) {
        out.failures.push_back(tag + ": closures of I^" + std::to_string(n) + " differ");
        all = false;
      }
    }
    agreed_closures += all;
  }
  out.detail = std::to_string(agreed_lengths) + "/50 lengths, " + std::to_string(agreed_closures) +
               "/50 closure pairs agree";
  return out;
}

using Criterion = std::function<Outcome()>;
const std::vector<Criterion> kCriteria = {criterion1, criterion2, criterion3, criterion4,
                                          criterion5, criterion6, criterion7, criterion8};

std::string digest_path(const std::string& dir, int n) {
  return (fs::path(dir) / ("criterion" + std::to_string(n) + ".digest")).string();
}

void report(int n, const Outcome& out, double seconds) {
  std::cout << "CRITERION " << n << ": " << (out.failures.empty() ? "PASS" : "FAIL") << "  [" << std::fixed
            << std::setprecision(1) << seconds << " s] " << out.detail << "\n";
  for (const auto& f : out.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
}

Outcome timed(int n, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = kCriteria[n - 1]();
  seconds = seconds_since(start);
  return out;
}

// Runs 1-8 again and compares with the stored digests (or with a first
// in-process pass when a digest is missing).
Outcome criterion9(const std::string& dir, std::map<int, std::string> first) {
  Outcome out;
  unsigned identical = 0;
  for (int n = 1; n <= 8; ++n) {
    if (!first.count(n) && !dir.empty()) {
      std::ifstream in(digest_path(dir, n));
      if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        first[n] = ss.str();
      }
    }
    double s = 0;
    if (!first.count(n)) first[n] = timed(n, s).digest;
    const std::string again = timed(n, s).digest;
    if (again == first[n]) {
      ++identical;
    } else {
      out.failures.push_back("criterion " + std::to_string(n) + " reports differ between runs");
    }
  }
  out.detail = std::to_string(identical) + "/8 criteria byte-identical";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string dir;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--criterion" && a + 1 < argc) {
      only = std::stoi(argv[++a]);
    } else if (arg == "--digest-dir" && a + 1 < argc) {
      dir = argv[++a];
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--digest-dir DIR]\n";
      return 64;
    }
  }
  if (only < 0 || only > 9) {
    std::cerr << "criterion must be 1-9\n";
    return 64;
  }

  bool all_pass = true;
  std::map<int, std::string> digests;
  for (int n = 1; n <= 8; ++n) {
    if (only != 0 && only != n) continue;
    double s = 0;
    const Outcome out = timed(n, s);
    report(n, out, s);
    all_pass = all_pass && out.failures.empty();
    digests[n] = out.digest;
    if (!dir.empty()) {
      fs::create_directories(dir);
      std::ofstream(digest_path(dir, n)) << out.digest;
    }
  }
  if (only == 0 || only == 9) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome out = criterion9(only == 9 ? dir : std::string(), digests);
    report(9, out, seconds_since(start));
    all_pass = all_pass && out.failures.empty();
  }
  return all_pass ? 0 : 1;
}
