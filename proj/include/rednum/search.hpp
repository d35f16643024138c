#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rednum/analyze.hpp"

namespace rednum {

enum class IdealFamily { Monomial, Binomial };

struct SearchConfig {
  std::uint64_t seed = 42;
  unsigned trials = 50;
  unsigned vars = 3;  // 2 or 3
  unsigned max_deg = 4;
  /// Extra generators beyond the pure powers.
  unsigned min_gens = 1;
  unsigned max_gens = 5;
  IdealFamily family = IdealFamily::Monomial;
  std::optional<unsigned> cap;
  std::optional<unsigned> horizon;
  unsigned samples = 1;
  unsigned workers = 1;
  bool superficial_quotient_check = true;
  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct Finding {
  /// "violation", "near-equality" or "skipped".
  std::string kind;
  std::string check;
  std::optional<mpz_class> lhs;
  std::optional<mpz_class> rhs;
  std::string message;
};

struct TrialResult {
  unsigned index = 0;
  IdealSpec spec;
  AnalysisReport report;
  std::vector<Finding> findings;
};

struct SearchSummary {
  SearchConfig config;
  std::vector<TrialResult> trials;  // in trial order
  unsigned violations = 0;
  unsigned near_equalities = 0;
  unsigned skipped = 0;
};

/// The random m-primary ideal of trial `index`: pure powers of every
/// variable plus sampled monomials (or binomials) of degree <= max_deg.
IdealSpec random_ideal_spec(const SearchConfig& config, unsigned index);

/// Analyzes `config.trials` random ideals and records violations and
/// near-equalities (rhs - lhs <= 1) of the bounds it targets.
SearchSummary search_counterexamples(const SearchConfig& config);

/// Line-oriented log; flagged trials carry a `REPLAY:` line with the spec.
std::string search_log(const SearchSummary& summary);

}  // namespace rednum
