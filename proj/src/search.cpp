#include "rednum/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rednum {

namespace {

const std::vector<std::string> kNames = {"x", "y", "z"};

std::string monomial_text(const std::vector<unsigned>& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

// Uniform draw in [lo, hi] by rejection-free modulo; the engine is fully
// specified, so draws are identical on every platform.
unsigned draw(std::mt19937_64& rng, unsigned lo, unsigned hi) {
  return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
}

// Mixed monomial (at least two variables) of total degree in [2, max_deg].
std::vector<unsigned> mixed_monomial(std::mt19937_64& rng, unsigned vars, unsigned max_deg) {
  for (;;) {
    const unsigned deg = draw(rng, 2, max_deg);
    std::vector<unsigned> e(vars, 0);
    for (unsigned k = 0; k < deg; ++k) ++e[draw(rng, 0, vars - 1)];
    if (std::count(e.begin(), e.end(), 0u) <= static_cast<long>(vars) - 2) return e;
  }
}

const std::set<std::string>& targeted(unsigned d) {
  static const std::set<std::string> two = {"B2", "B3", "B3-mod", "B7", "B8"};
  static const std::set<std::string> three = {"B2", "B3", "B3-mod", "B5"};
  return d == 2 ? two : three;
}

std::vector<Finding> classify(const AnalysisReport& rep) {
  std::vector<Finding> out;
  const unsigned d = rep.bundle.d;
  for (const auto& c : rep.bounds.checks) {
    if (c.holds && !*c.holds) {
      out.push_back({"violation", c.id, c.lhs, c.rhs, c.statement});
    } else if (c.open_case_failure) {
      out.push_back({"violation", c.id, c.lhs, c.rhs, "open case: " + c.reason});
    } else if (c.holds && targeted(d).count(c.id) && c.lhs && c.rhs && *c.rhs - *c.lhs <= 1) {
      out.push_back({"near-equality", c.id, c.lhs, c.rhs, c.statement});
    }
  }
  if (rep.thm22.status == "violation") {
    std::string msg;
    for (const auto& f : rep.thm22.failures) msg += (msg.empty() ? "" : "; ") + f;
    out.push_back({"violation", "dimension-two-battery", std::nullopt, std::nullopt, msg});
  }
  if (rep.quotient_check && rep.quotient_check->evaluated && !rep.quotient_check->consistent) {
    const auto& q = *rep.quotient_check;
    out.push_back({"violation", "superficial-quotient", mpz_class(q.r), mpz_class(q.r_quotient),
                   "a power in [r_quotient, r) is Ratliff-Rush closed"});
  }
  if (rep.quotient_check && rep.quotient_check->evaluated && !rep.quotient_check->depth_bound_consistent) {
    const auto& q = *rep.quotient_check;
    out.push_back({"violation", "superficial-quotient-depth", mpz_class(q.r), mpz_class(q.r_quotient),
                   "r exceeds r_quotient + t - 1 for a certified depth t"});
  }
  std::string uncertified;
  for (const auto& s : rep.stages) {
    if (!s.certified) uncertified += (uncertified.empty() ? "" : "; ") + s.name + (s.message.empty() ? "" : ": " + s.message);
  }
  if (!rep.error.empty()) uncertified += (uncertified.empty() ? "" : "; ") + rep.error;
  if (!uncertified.empty()) out.push_back({"skipped", "", std::nullopt, std::nullopt, uncertified});
  return out;
}

}  // namespace

void SearchConfig::validate() const {
  if (vars != 2 && vars != 3) throw std::invalid_argument("vars must be 2 or 3");
  if (max_deg < 2) throw std::invalid_argument("max_deg must be at least 2");
  if (min_gens > max_gens) throw std::invalid_argument("min_gens exceeds max_gens");
  if (samples == 0 || workers == 0) throw std::invalid_argument("samples and workers must be positive");
  if ((cap && *cap == 0) || (horizon && *horizon == 0)) throw std::invalid_argument("cap and horizon must be positive");
}

IdealSpec random_ideal_spec(const SearchConfig& config, unsigned index) {
  std::mt19937_64 rng(derive_seed(config.seed, index));
  IdealSpec spec;
  spec.id = "trial-" + std::to_string(index);
  spec.vars.assign(kNames.begin(), kNames.begin() + config.vars);
  for (unsigned i = 0; i < config.vars; ++i) {
    std::vector<unsigned> e(config.vars, 0);
    e[i] = draw(rng, 2, config.max_deg);
    spec.generators.push_back(monomial_text(e));
  }
  const unsigned extra = draw(rng, config.min_gens, config.max_gens);
  std::set<std::string> seen(spec.generators.begin(), spec.generators.end());
  for (unsigned k = 0; k < extra; ++k) {
    const std::string m = monomial_text(mixed_monomial(rng, config.vars, config.max_deg));
    if (config.family == IdealFamily::Binomial && rng() % 2 == 0) {
      static const char* coeffs[] = {"", "-", "2*", "-2*", "3*"};
      const std::string other = monomial_text(mixed_monomial(rng, config.vars, config.max_deg));
      if (other == m) continue;
      const std::string c = coeffs[rng() % 5];
      const std::string text = m + (c[0] == '-' ? " - " + c.substr(1) : " + " + c) + other;
      if (seen.insert(text).second) spec.generators.push_back(text);
    } else if (seen.insert(m).second) {
      spec.generators.push_back(m);
    }
  }
  return spec;
}

SearchSummary search_counterexamples(const SearchConfig& config) {
  config.validate();
  SearchSummary summary;
  summary.config = config;
  summary.trials.resize(config.trials);

  AnalyzeOptions options;
  options.cap = config.cap;
  options.horizon = config.horizon;
  options.samples = config.samples;
  options.superficial_quotient_check = config.superficial_quotient_check;

  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned i = next++; i < config.trials; i = next++) {
      TrialResult& t = summary.trials[i];
      t.index = i;
      t.spec = random_ideal_spec(config, i);
      AnalyzeOptions o = options;
      o.seed = derive_seed(config.seed, 1000003ULL + i);
      t.report = analyze(t.spec, o);
      t.findings = classify(t.report);
    }
  };
  const unsigned workers = std::min(config.workers, std::max(config.trials, 1u));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& t : summary.trials) {
    for (const auto& f : t.findings) {
      if (f.kind == "violation") ++summary.violations;
      else if (f.kind == "near-equality") ++summary.near_equalities;
      else ++summary.skipped;
    }
  }
  return summary;
}

std::string search_log(const SearchSummary& s) {
  std::ostringstream out;
  const auto& c = s.config;
  out << "SEARCH: seed=" << c.seed << " trials=" << c.trials << " vars=" << c.vars << " max_deg=" << c.max_deg
      << " family=" << (c.family == IdealFamily::Monomial ? "monomial" : "binomial") << "\n";
  for (const auto& t : s.trials) {
    if (t.findings.empty()) continue;
    for (const auto& f : t.findings) {
      out << (f.kind == "violation" ? "VIOLATION" : f.kind == "near-equality" ? "NEAR" : "SKIPPED") << ": trial "
          << t.index;
      if (!f.check.empty()) out << " " << f.check;
      if (f.lhs) out << " lhs=" << f.lhs->get_str();
      if (f.rhs) out << " rhs=" << f.rhs->get_str();
      if (!f.message.empty()) out << " (" << f.message << ")";
      out << "\n";
    }
    out << "REPLAY: " << spec_to_json(t.spec, -1) << "\n";
  }
  out << "SUMMARY: violations=" << s.violations << " near_equalities=" << s.near_equalities
      << " skipped=" << s.skipped << "\n";
  return out.str();
}

}  // namespace rednum
