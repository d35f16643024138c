#include "rednum/analyze.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "rednum/parser.hpp"

namespace rednum {

namespace {

Observable scalar(const mpz_class& v, bool certified = true) { return {{v}, certified, false, false}; }
Observable flag(bool v, bool certified = true) { return {{mpz_class(v ? 1 : 0)}, certified, true, false}; }
Observable list(std::vector<mpz_class> v, bool certified = true) { return {std::move(v), certified, false, true}; }

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingRef& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

// Runs one pipeline stage, recording its time and turning cap exhaustion
// into an uncertified stage rather than an abort.
class Stages {
 public:
  explicit Stages(AnalysisReport& report) : report_(report) {}

  bool run(const std::string& name, const std::function<StageStatus()>& body) {
    const auto start = std::chrono::steady_clock::now();
    StageStatus status;
    bool ok = true;
    try {
      status = body();
    } catch (const CapExceeded& e) {
      status = {name, false, std::string("cap exceeded: ") + e.what()};
      ok = false;
    }
    status.name = name;
    report_.stages.push_back(status);
    if (report_.options.timings) {
      report_.timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return ok;
  }

 private:
  AnalysisReport& report_;
};

// J^n, built from generator products so that no Groebner basis of the
// (possibly non-homogeneous) J is needed.
std::vector<Ideal> parameter_powers(const Ideal& j, unsigned max_n) {
  std::vector<Ideal> out{Ideal::unit(j.ring()), j};
  for (unsigned n = 2; n <= max_n; ++n) out.push_back(Ideal(j.ring(), generator_products(out.back(), j)));
  return out;
}

}  // namespace

ParsedSpec parse_spec_ideal(const IdealSpec& spec, const AnalyzeOptions& options) {
  const Field field = Field::parse(options.field.value_or(spec.field));
  const RingRef ring = make_ring(field, spec.vars, MonomialOrder::parse(options.order));
  auto relations = parse_all(spec.relations, ring);
  for (const auto& f : relations) {
    if (f.constant_term() != 0) throw std::invalid_argument("relation " + f.to_string() + " is not in m");
  }
  PresentationRef pres = make_presentation(ring, std::move(relations));
  auto gens = parse_all(spec.generators, ring);
  if (gens.empty()) throw std::invalid_argument("spec has no generators");
  for (const auto& g : gens) {
    if (g.constant_term() != 0) throw std::invalid_argument("generator " + g.to_string() + " is not in m");
  }
  return {pres, Ideal(pres, std::move(gens))};
}

AnalysisReport analyze(const IdealSpec& spec, const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.spec = spec;
  rep.options = options;
  set_power_cap(options.max_power);
  Stages stages(rep);

  std::optional<ParsedSpec> parsed;
  try {
    parsed = parse_spec_ideal(spec, options);
  } catch (const std::exception& e) {
    rep.error = std::string("parse: ") + e.what();
    rep.stages.push_back({"parse", false, rep.error});
    rep.exit_code = 3;
    return rep;
  }
  const PresentationRef ring = parsed->ring;
  const Ideal& ideal = parsed->ideal;
  InvariantBundle& b = rep.bundle;
  b.cohen_macaulay = ring->is_polynomial_ring()
                         ? Status::Verified
                         : (spec.asserted.cohen_macaulay ? Status::UserAsserted : Status::Unknown);
  b.buchsbaum = spec.asserted.buchsbaum ? Status::UserAsserted : Status::Unknown;
  b.rr_depth_at_least_two = spec.asserted.rr_depth_at_least_two ? Status::UserAsserted : Status::Unknown;
  b.is_maximal_ideal = ideal_equal(ideal, Ideal::maximal(ring));

  try {
    if (!stages.run("m-primary", [&] {
          const bool ok = ideal.is_m_primary();
          return StageStatus{"", ok, ok ? "" : "ideal is not m-primary"};
        }) ||
        !rep.stages.back().certified) {
      rep.exit_code = 3;
      rep.error = "ideal is not m-primary";
      return rep;
    }

    stages.run("dimension", [&] {
      rep.dimension = krull_dimension(ring);
      return StageStatus{"", true, ""};
    });
    if (!rep.dimension) {
      rep.exit_code = 3;
      return rep;
    }
    const unsigned d = *rep.dimension;
    b.d = d;

    stages.run("hilbert", [&] {
      rep.hilbert = hilbert_coefficients(ideal, d);
      return StageStatus{"", rep.hilbert->certified, rep.hilbert->certified ? "" : "polynomial regime not certified"};
    });
    if (rep.hilbert) {
      b.e = rep.hilbert->coefficients;
      b.e_certified = rep.hilbert->certified;
    }

    stages.run("length", [&] {
      b.length = mpz_class(ideal.quotient_length());
      b.order = ideal.order_in_m();
      return StageStatus{"", true, ""};
    });

    std::optional<mpz_class> e0;
    if (b.e_certified && !b.e.empty()) e0 = b.e[0];
    rep.cap = reduction_cap(options.cap, d, e0, b.order);

    std::optional<Ideal> j;
    stages.run("reduction", [&] {
      if (spec.reduction) {
        Ideal given(ring, parse_all(*spec.reduction, ring->ambient()));
        rep.reduction = is_reduction_with_number(ideal, given, rep.cap.value);
      } else {
        rep.reduction =
            find_minimal_reduction(ideal, d, derive_seed(options.seed, 1), options.attempts, rep.cap.value,
                                   std::nullopt, options.samples);
      }
      rep.reduction->cap = rep.cap.value;
      rep.reduction->cap_from_vasconcelos = rep.cap.from_vasconcelos;
      if (rep.reduction->verified) {
        j = Ideal(ring, rep.reduction->generators);
        b.r = rep.reduction->r;
      }
      return StageStatus{"", rep.reduction->verified, rep.reduction->failure};
    });

    if (j) {
      stages.run("reduction-length", [&] {
        rep.observables["length_r_over_j"] = scalar(length_with_floor(*j, ideal.power(*b.r + 1)));
        return StageStatus{"", true, ""};
      });
    }

    RatliffRush rr(ideal);
    stages.run("filtration", [&] {
      unsigned horizon = options.horizon.value_or(b.r ? *b.r + d + 2 : d + 4);
      std::optional<long> e2;
      if (d == 2 && b.e_certified) {
        e2 = b.e[2].get_si();
        if (!options.horizon) horizon = std::max<long>(horizon, *e2 + 2);
      }
      horizon = std::max(horizon, 2u);
      std::optional<std::pair<Ideal, unsigned>> red;
      if (j) red = std::make_pair(*j, *b.r);
      FiltrationTable table = build_filtration_table(rr, horizon, red, e2);
      FiltrationSummary sum;
      sum.horizon = table.horizon;
      for (const auto& rec : table.records) {
        sum.rows.push_back({rec.n, rec.power_length, rec.closure_length, rec.closed, rec.certified});
      }
      sum.rho = table.rho;
      sum.v = table.v;
      sum.rtilde = table.rtilde;
      b.rho = table.rho;
      b.rtilde = table.rtilde;
      b.closure_length = mpz_class(table.records.front().closure_length);
      b.v = table.v;
      b.v_certified = table.rtilde && table.rtilde->certified;
      const unsigned tmax = std::min(horizon, std::max(3u, table.rho.value));
      for (unsigned t = 1; t <= tmax; ++t) b.depth_flags[t] = depth_g_positive(table, t);
      rep.filtration = sum;
      bool certified = table.rho.certified;
      for (const auto& rec : table.records) certified = certified && rec.certified;
      if (d == 2) certified = certified && table.rtilde && table.rtilde->certified;
      return StageStatus{"", certified, certified ? "" : "filtration data not certified within the horizon"};
    });

    if (!spec.closure_witnesses.empty()) {
      stages.run("closure-witnesses", [&] {
        const ClosureResult c = rr.closure(1);
        for (const auto& w : parse_all(spec.closure_witnesses, ring->ambient())) {
          rep.witnesses.push_back(c.ideal.contains(w) && !ideal.contains(w));
        }
        return StageStatus{"", c.certified, c.certified ? "" : "closure of I not certified"};
      });
    }

    if (j) {
      stages.run("ring-invariants", [&] {
        const RingInvariants inv =
            d == 0 ? cm_type_and_mu(ring, Ideal::zero(ring)) : cm_type_and_mu(ring, *j, ideal.power(*b.r + 1));
        b.cm_type = inv.cm_type;
        b.mu = inv.mu;
        return StageStatus{"", true, ""};
      });
    }

    if (spec.superficial && rep.hilbert) {
      stages.run("superficial", [&] {
        const Polynomial x = parse_polynomial(*spec.superficial, ring->ambient());
        rep.superficial = check_superficial(ideal, *rep.hilbert, x);
        if (rep.superficial->accepted && j) {
          const ReductionCertificate q = is_reduction_with_number(ideal, *j, rep.cap.value, {x});
          if (q.verified) rep.observables["r_mod_superficial"] = scalar(q.r);
        }
        const bool certified = rep.superficial->accepted || rep.superficial->failure == "coefficients differ" ||
                               rep.superficial->failure == "element is not in I \\ mI";
        return StageStatus{"", certified, rep.superficial->failure};
      });
    }

    if (options.superficial_quotient_check && d >= 1 && rep.hilbert && rep.hilbert->certified && rep.filtration) {
      stages.run("superficial-quotient", [&] {
        QuotientReductionCheck qc;
        const SuperficialCertificate s =
            find_superficial_element(ideal, *rep.hilbert, derive_seed(options.seed, 2), options.attempts);
        if (!s.accepted) {
          qc.message = "no superficial element found: " + s.failure;
          rep.quotient_check = qc;
          return StageStatus{"", false, qc.message};
        }
        qc.element = s.element;
        const ReductionCertificate full = find_minimal_reduction(ideal, d, derive_seed(options.seed, 3),
                                                                 options.attempts, rep.cap.value, s.element, 1);
        if (!full.verified) {
          qc.message = "no reduction through the superficial element: " + full.failure;
          rep.quotient_check = qc;
          return StageStatus{"", false, qc.message};
        }
        const ReductionCertificate quot =
            is_reduction_with_number(ideal, Ideal(ring, full.generators), rep.cap.value, {s.element});
        if (!quot.verified) {
          qc.message = "quotient reduction not verified: " + quot.failure;
          rep.quotient_check = qc;
          return StageStatus{"", false, qc.message};
        }
        qc.evaluated = true;
        qc.reduction = full.generators;
        qc.r = full.r;
        qc.r_quotient = quot.r;
        // ~I^n != I^n for r_quotient <= n < r; n = 0 is always closed.
        for (unsigned n = quot.r; n < full.r; ++n) {
          if (n == 0) {
            qc.consistent = false;
            continue;
          }
          if (n > rep.filtration->horizon) {
            qc.complete = false;
            break;
          }
          if (rep.filtration->rows[n - 1].closed) qc.consistent = false;
        }
        // r <= r_quotient + t - 1 when depth G(I^t) > 0, and r <= r_quotient
        // + k - 1 when moreover r = k mod t with 1 <= k <= t-1.
        for (const auto& [t, f] : b.depth_flags) {
          if (!f.certified || !f.value) continue;
          const unsigned k = full.r % t;
          const unsigned slack = (t >= 2 && k != 0) ? k : t;
          if (full.r + 1 > quot.r + slack) qc.depth_bound_consistent = false;
        }
        rep.quotient_check = qc;
        return StageStatus{"", qc.complete, qc.complete ? "" : "range exceeds the filtration horizon"};
      });
    }

    if (spec.asserted.buchsbaum && j && d >= 1) {
      stages.run("parameter-hilbert", [&] {
        const unsigned r = *b.r;
        const auto powers = parameter_powers(*j, options.max_power);
        const HilbertData hj = analyze_hilbert_function(
            [&](unsigned n) -> std::size_t {
              if (n == 0) return 0;
              return length_with_floor(powers.at(n), ideal.power(n + r));
            },
            d, options.max_power - r);
        b.e_of_j = hj.coefficients;
        b.e_of_j_certified = hj.certified;
        return StageStatus{"", hj.certified, hj.certified ? "" : "e_i(J) not certified"};
      });
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.stages.push_back({"error", false, rep.error});
  }

  rep.bounds = evaluate_bounds(b);
  rep.thm22 = check_thm22_equivalences(b);

  // Observables: every computed number under a stable key.
  auto& obs = rep.observables;
  if (rep.dimension) obs["dimension"] = scalar(*rep.dimension);
  if (!b.e.empty()) {
    obs["e"] = list(b.e, b.e_certified);
    for (std::size_t i = 0; i < b.e.size(); ++i) obs["e" + std::to_string(i)] = scalar(b.e[i], b.e_certified);
  }
  if (b.length) obs["length"] = scalar(*b.length);
  if (b.order) obs["order"] = scalar(*b.order);
  if (b.r) obs["r"] = scalar(*b.r);
  if (b.rho) obs["rho"] = scalar(b.rho->value, b.rho->certified);
  if (b.rtilde) {
    obs["rtilde"] = scalar(b.rtilde->value, b.rtilde->certified);
    if (b.r) obs["rtilde_lt_r"] = flag(b.rtilde->value < *b.r, b.rtilde->certified);
  }
  if (b.closure_length) obs["closure_length"] = scalar(*b.closure_length);
  for (const auto& [t, f] : b.depth_flags) obs["depth_g." + std::to_string(t)] = flag(f.value, f.certified);
  if (!b.v.empty()) {
    std::vector<mpz_class> v(b.v.begin(), b.v.end());
    mpz_class sum = 0;
    mpz_class weighted = 0;
    for (std::size_t n = 0; n < b.v.size(); ++n) {
      sum += b.v[n];
      weighted += mpz_class(n) * b.v[n];
    }
    obs["v"] = list(v, b.v_certified);
    obs["sum_v"] = scalar(sum, b.v_certified);
    obs["weighted_sum_v"] = scalar(weighted, b.v_certified);
  }
  if (b.cm_type) obs["type"] = scalar(*b.cm_type);
  if (b.mu) obs["mu"] = scalar(*b.mu);
  if (!b.e_of_j.empty()) obs["e_of_j"] = list(b.e_of_j, b.e_of_j_certified);
  for (const auto& c : rep.bounds.checks) {
    if (c.rhs) obs["rhs." + c.id] = scalar(*c.rhs);
    if (c.holds) obs["holds." + c.id] = flag(*c.holds);
  }
  if (rep.superficial) obs["superficial"] = flag(rep.superficial->accepted);
  if (!rep.witnesses.empty()) {
    bool all = true;
    for (bool w : rep.witnesses) all = all && w;
    obs["closure_witnesses"] = flag(all, rep.filtration.has_value() && rep.filtration->rows.front().certified);
  }
  if (rep.thm22.c1) {
    obs["thm22.c1"] = flag(*rep.thm22.c1);
    obs["thm22.c2"] = flag(*rep.thm22.c2);
    obs["thm22.c3"] = flag(*rep.thm22.c3);
    obs["thm22.c4"] = flag(*rep.thm22.c4);
    obs["thm22.plus_two_identity"] = flag(*rep.thm22.plus_two_identity);
  }
  if (rep.reduction && rep.reduction->samples > 0) obs["reduction_samples"] = scalar(rep.reduction->samples);

  bool mismatch = false;
  bool uncertified = !rep.error.empty();
  for (const auto& e : spec.expect) {
    ExpectationResult res;
    res.key = e.key;
    res.expected = e;
    const auto it = obs.find(e.key);
    if (it == obs.end()) {
      res.status = "missing";
      uncertified = true;
    } else {
      res.computed = it->second;
      if (it->second.value != e.value) {
        res.status = "mismatch";
        mismatch = true;
      } else if (!it->second.certified) {
        res.status = "uncertified";
        uncertified = true;
      } else {
        res.status = "match";
      }
    }
    rep.expectations.push_back(std::move(res));
  }
  for (const auto& s : rep.stages) uncertified = uncertified || !s.certified;

  const bool violation = rep.bounds.violation() || rep.thm22.status == "violation" ||
                         (rep.quotient_check && rep.quotient_check->evaluated &&
                          (!rep.quotient_check->consistent || !rep.quotient_check->depth_bound_consistent));
  rep.exit_code = violation ? 4 : mismatch ? 2 : uncertified ? 3 : 0;
  return rep;
}

}  // namespace rednum
