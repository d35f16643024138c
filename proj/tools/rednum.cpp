#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rednum/analyze.hpp"
#include "rednum/parser.hpp"
#include "rednum/search.hpp"

namespace fs = std::filesystem;
using namespace rednum;

namespace {

// Invalid input (unreadable file, malformed spec); distinct from the
// analysis statuses 2, 3 and 4.
constexpr int kInputError = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

std::string show(const Observable& o) {
  if (o.boolean) return o.value.front() != 0 ? "true" : "false";
  if (!o.list) return o.value.front().get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < o.value.size(); ++i) s += (i ? "," : "") + o.value[i].get_str();
  return s + ")";
}

std::string show(const Expectation& e) { return show(Observable{e.value, true, e.boolean, e.list}); }

void print_summary(const AnalysisReport& rep, std::ostream& out) {
  out << "spec " << (rep.spec.id.empty() ? "(unnamed)" : rep.spec.id) << "\n";
  for (const auto& s : rep.stages) {
    out << "  stage " << std::left << std::setw(22) << s.name << (s.certified ? "certified" : "UNCERTIFIED");
    if (!s.message.empty()) out << "  " << s.message;
    out << "\n";
  }
  for (const auto& [key, val] : rep.observables) {
    out << "  " << std::left << std::setw(24) << key << show(val) << (val.certified ? "" : "  (uncertified)") << "\n";
  }
  out << "  bounds: " << rep.bounds.verdict << "\n";
  for (const auto& c : rep.bounds.checks) {
    if (!c.rhs) continue;
    out << "    " << std::left << std::setw(7) << c.id << "lhs " << (c.lhs ? c.lhs->get_str() : "?") << " rhs "
        << c.rhs->get_str() << "  " << (c.holds ? (*c.holds ? "holds" : "FAILS") : "inapplicable: " + c.reason)
        << "\n";
  }
  if (rep.thm22.status != "not applicable") out << "  dimension-two battery: " << rep.thm22.status << "\n";
  for (const auto& e : rep.expectations) {
    out << "  expect " << std::left << std::setw(22) << e.key << show(e.expected) << " -> "
        << (e.computed ? show(*e.computed) : "-") << "  " << e.status << "\n";
  }
  if (!rep.error.empty()) out << "  error: " << rep.error << "\n";
  out << "exit " << rep.exit_code << "\n";
}

// ex2.6(1,2) -> ex2.6_1_2
std::string fixture_name(std::string id) {
  for (auto& c : id) {
    if (c == '(' || c == ',') c = '_';
  }
  std::erase(id, ')');
  return id;
}

struct ExampleSource {
  std::string id;
  IdealSpec spec;
};

std::vector<ExampleSource> load_examples(const std::string& dir, const std::string& filter) {
  std::vector<ExampleSource> out;
  if (dir.empty()) {
    for (const auto& id : example_ids()) out.push_back({id, registry_example(id)});
  } else {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      IdealSpec s = parse_spec_json(read_file(f.string()));
      out.push_back({s.id.empty() ? f.stem().string() : s.id, s});
    }
  }
  if (!filter.empty()) {
    std::erase_if(out, [&](const ExampleSource& e) { return e.id.find(filter) == std::string::npos; });
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction numbers, Hilbert coefficients and Ratliff-Rush filtrations of m-primary ideals"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  AnalyzeOptions options;
  std::string spec_path;
  std::string report_path;
  bool quiet = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one ideal spec (JSON)");
  analyze_cmd->add_option("spec", spec_path, "Spec file")->required();
  analyze_cmd->add_option("--report", report_path, "Write the JSON report here ('-' for stdout)");
  analyze_cmd->add_option("--order", options.order, "Monomial order: grevlex, lex or deglex");
  analyze_cmd->add_option("--cap", options.cap, "Reduction-number scan cap");
  analyze_cmd->add_option("--horizon", options.horizon, "Filtration horizon");
  analyze_cmd->add_option("--seed", options.seed, "Seed for the reduction search");
  analyze_cmd->add_option("--field", options.field, "Coefficient field: Q or Fp:<p>");
  analyze_cmd->add_option("--samples", options.samples, "Verified reductions compared by the search");
  analyze_cmd->add_option("--attempts", options.attempts, "Random candidates tried by the search");
  analyze_cmd->add_option("--max-power", options.max_power, "Largest power of I computed");
  analyze_cmd->add_flag("--quotient-check", options.superficial_quotient_check,
                        "Compare r with the reduction number modulo a superficial element");
  analyze_cmd->add_flag("--timings", options.timings, "Record stage timings in the report");
  analyze_cmd->add_flag("-q,--quiet", quiet, "Suppress the summary");

  auto* examples_cmd = app.add_subcommand("examples", "Worked examples");
  examples_cmd->require_subcommand(1);
  std::string filter;
  std::string dir;
  auto* run_cmd = examples_cmd->add_subcommand("run", "Run the examples and print expected vs computed");
  run_cmd->add_option("--filter", filter, "Only ids containing this string");
  run_cmd->add_option("--dir", dir, "Read spec files from this directory instead of the built-in registry");
  std::string export_dir;
  auto* export_cmd = examples_cmd->add_subcommand("export", "Write the registry as spec files");
  export_cmd->add_option("dir", export_dir, "Target directory")->required();

  SearchConfig config;
  std::string family = "monomial";
  std::string log_path;
  bool no_quotient = false;
  auto* search_cmd = app.add_subcommand("search", "Randomized search for bound violations");
  search_cmd->add_option("--seed", config.seed, "Base seed");
  search_cmd->add_option("--trials", config.trials, "Number of random ideals");
  search_cmd->add_option("--vars", config.vars, "Number of variables (2 or 3)");
  search_cmd->add_option("--max-deg", config.max_deg, "Largest generator degree");
  search_cmd->add_option("--min-gens", config.min_gens, "Least number of mixed generators");
  search_cmd->add_option("--max-gens", config.max_gens, "Largest number of mixed generators");
  search_cmd->add_option("--family", family, "monomial or binomial")->check(CLI::IsMember({"monomial", "binomial"}));
  search_cmd->add_option("--cap", config.cap, "Reduction-number scan cap");
  search_cmd->add_option("--horizon", config.horizon, "Filtration horizon");
  search_cmd->add_option("--samples", config.samples, "Verified reductions compared per trial");
  search_cmd->add_option("--workers", config.workers, "Worker threads");
  search_cmd->add_flag("--no-quotient-check", no_quotient, "Skip the superficial quotient check");
  search_cmd->add_option("--log", log_path, "Also write the log to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const IdealSpec spec = parse_spec_json(read_file(spec_path));
      const AnalysisReport rep = analyze(spec, options);
      if (!quiet) print_summary(rep, report_path == "-" ? std::cerr : std::cout);
      if (report_path == "-") {
        std::cout << report_to_json(rep) << "\n";
      } else if (!report_path.empty()) {
        write_file(report_path, report_to_json(rep));
      }
      return rep.exit_code;
    }

    if (*run_cmd) {
      const auto examples = load_examples(dir, filter);
      int exit_code = 0;
      std::size_t rows = 0;
      std::size_t failed = 0;
      std::cout << std::left << std::setw(12) << "id" << std::setw(26) << "key" << std::setw(16) << "expected"
                << std::setw(16) << "computed"
                << "status\n";
      for (const auto& ex : examples) {
        AnalysisReport rep;
        try {
          rep = analyze(ex.spec, options);
        } catch (const std::exception& e) {
          std::cout << std::setw(12) << ex.id << "error: " << e.what() << "\n";
          ++failed;
          exit_code = std::max(exit_code, 3);
          continue;
        }
        for (const auto& e : rep.expectations) {
          ++rows;
          const bool pass = e.status == "match";
          if (!pass) ++failed;
          std::cout << std::setw(12) << ex.id << std::setw(26) << e.key << std::setw(16) << show(e.expected)
                    << std::setw(16) << (e.computed ? show(*e.computed) : "-") << (pass ? "PASS" : "FAIL " + e.status)
                    << "\n";
        }
        if (!rep.error.empty()) std::cout << std::setw(12) << ex.id << "error: " << rep.error << "\n";
        exit_code = std::max(exit_code, rep.exit_code);
      }
      std::cout << examples.size() << " examples, " << rows << " rows, " << failed << " failed\n";
      return exit_code;
    }

    if (*export_cmd) {
      fs::create_directories(export_dir);
      for (const auto& id : example_ids()) {
        write_file((fs::path(export_dir) / (fixture_name(id) + ".json")).string(), spec_to_json(registry_example(id)));
      }
      return 0;
    }

    if (*search_cmd) {
      config.family = family == "binomial" ? IdealFamily::Binomial : IdealFamily::Monomial;
      config.superficial_quotient_check = !no_quotient;
      const SearchSummary summary = search_counterexamples(config);
      const std::string log = search_log(summary);
      std::cout << log;
      if (!log_path.empty()) write_file(log_path, log);
      return summary.violations > 0 ? 4 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
