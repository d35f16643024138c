#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rednum/bounds.hpp"
#include "rednum/filtration.hpp"
#include "rednum/hilbert.hpp"
#include "rednum/reduction.hpp"
#include "rednum/spec.hpp"

namespace rednum {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "rednum-report/1";

struct AnalyzeOptions {
  std::optional<unsigned> cap;      // reduction scan cap; Vasconcelos value when absent
  std::optional<unsigned> horizon;  // filtration horizon; r + d + 2 when absent
  std::uint64_t seed = 42;
  unsigned attempts = 24;
  unsigned samples = 4;  // verified reductions compared by the search
  unsigned max_power = 40;
  std::string order = "grevlex";
  std::optional<std::string> field;  // overrides the spec's field
  /// Searches a superficial element x, a reduction containing it, and
  /// checks the ~I^n != I^n consequence of r_{J/(x)} < r_J.
  bool superficial_quotient_check = false;
  bool timings = false;
};

struct Observable {
  std::vector<mpz_class> value;
  bool certified = true;
  bool boolean = false;
  bool list = false;
};

struct ExpectationResult {
  std::string key;
  Expectation expected;
  std::optional<Observable> computed;
  /// "match", "mismatch", "missing" or "uncertified".
  std::string status;
};

struct StageStatus {
  std::string name;
  bool certified = false;
  std::string message;
};

/// Consequence of r_{J/(x)}(I/(x)) < r_J(I) for a superficial x in J.
struct QuotientReductionCheck {
  bool evaluated = false;
  std::string message;
  Polynomial element;
  std::vector<Polynomial> reduction;
  unsigned r = 0;
  unsigned r_quotient = 0;
  /// ~I^n != I^n for every n in [r_quotient, r) within the horizon.
  bool consistent = true;
  bool complete = true;  // the whole range was within the horizon
  /// r <= r_quotient + t - 1 (or + k - 1 when r = k mod t, 1 <= k <= t-1)
  /// for every t with depth G(I^t) > 0 certified.
  bool depth_bound_consistent = true;
};

struct FiltrationSummary {
  unsigned horizon = 0;
  struct Row {
    unsigned n;
    std::size_t power_length;
    std::size_t closure_length;
    bool closed;
    bool certified;
  };
  std::vector<Row> rows;
  CertifiedValue rho;
  std::vector<std::size_t> v;
  std::optional<CertifiedValue> rtilde;
};

struct AnalysisReport {
  IdealSpec spec;
  AnalyzeOptions options;
  std::vector<StageStatus> stages;
  std::optional<unsigned> dimension;
  std::optional<HilbertData> hilbert;
  std::optional<ReductionCertificate> reduction;
  ReductionCap cap;
  std::optional<FiltrationSummary> filtration;
  std::optional<SuperficialCertificate> superficial;
  std::optional<QuotientReductionCheck> quotient_check;
  std::vector<bool> witnesses;  // per closure witness: in ~I \ I
  InvariantBundle bundle;
  BoundReport bounds;
  Thm22Verdict thm22;
  std::map<std::string, Observable> observables;
  std::vector<ExpectationResult> expectations;
  std::map<std::string, double> timings;
  /// 0 all certified and expected; 2 expectation mismatch; 3 uncertified
  /// results; 4 theorem-violation candidate.
  int exit_code = 0;
  std::string error;  // set when a stage threw
};

AnalysisReport analyze(const IdealSpec& spec, const AnalyzeOptions& options = {});

/// Builds the ring presentation and the ideal of a spec.
struct ParsedSpec {
  PresentationRef ring;
  Ideal ideal;
};
ParsedSpec parse_spec_ideal(const IdealSpec& spec, const AnalyzeOptions& options = {});

std::string report_to_json(const AnalysisReport& report, int indent = 2);

}  // namespace rednum
