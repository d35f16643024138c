#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rednum {

struct AssertedProperties {
  bool cohen_macaulay = false;
  bool buchsbaum = false;
  /// depth of the associated graded ring of the Ratliff-Rush filtration >= 2
  bool rr_depth_at_least_two = false;
};

/// An expected invariant. Scalars hold one entry, lists several; booleans
/// are stored as 0/1 with `boolean` set.
struct Expectation {
  std::string key;
  std::vector<mpz_class> value;
  bool boolean = false;
  bool list = false;
};

/// Input document of `analyze`: a ring presentation, the ideal, optional
/// extras and expected values.
struct IdealSpec {
  std::string id;
  std::string field = "Q";
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<std::string> generators;
  std::optional<std::vector<std::string>> reduction;
  /// Candidate superficial element checked by coefficient preservation.
  std::optional<std::string> superficial;
  /// Elements expected in ~I but not in I.
  std::vector<std::string> closure_witnesses;
  std::vector<Expectation> expect;
  AssertedProperties asserted;
};

/// Throws std::invalid_argument on malformed documents.
IdealSpec parse_spec_json(const std::string& text);
/// `indent` < 0 gives the compact single-line form.
std::string spec_to_json(const IdealSpec& spec, int indent = 2);

/// Registry of the worked examples: ex2.6(m,d) for m <= 2, 2 <= d <= 3,
/// ex3.4, ex3.5, ex3.9 and ex4.3.
std::vector<std::string> example_ids();
/// Throws std::out_of_range for an unknown id.
IdealSpec registry_example(const std::string& id);

/// The ring of the ex2.6 family with m + 2d + 1 variables x1..xm, y,
/// v1..vd, z1..zd.
IdealSpec example_family_ring(unsigned m, unsigned d);

}  // namespace rednum
