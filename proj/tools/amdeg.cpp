// Command-line front end: construct, analyze, reproduce, enumerate.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "amdeg/embedded_data.hpp"
#include "amdeg/reproduce.hpp"

namespace {

using namespace amdeg;

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kPointOnVariety = 3 };

struct Options {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  bool json = false;
  int degree_cap = 8;
  int jobs = 1;
};

void print_report(std::ostream& os, const VarietyReport& r) {
  const auto& inv = r.invariants;
  os << r.betti.to_table();
  os << "ambient P^" << r.num_vars - 1 << "  dim " << inv.dim << "  codim " << inv.codim << "  degree " << inv.degree
     << "\n";
  os << "depth " << inv.depth << "  codepth " << inv.codepth << "  reg " << inv.regularity << "  pd " << inv.projective_dim
     << (r.gorenstein ? "  (arithmetically Gorenstein)" : r.acm ? "  (arithmetically Cohen-Macaulay)" : "") << "\n";
  os << "hilbert series " << r.series.reduced().to_string() << "\n";
  os << "degree class " << to_string(r.degree_class);
  if (r.theorem_case) os << "  case " << *r.theorem_case;
  os << "\n";
  if (r.degenerate) os << "warning: degenerate (the ideal contains a linear form)\n";
  for (const auto& c : r.checks) os << (c.passed ? "  pass  " : "  FAIL  ") << std::left << std::setw(16) << c.name << c.detail << "\n";
}

int cmd_construct(const std::string& spec, const Options& opt) {
  BuiltIdeal b = build_ideal(spec, {opt.prime, opt.seed});
  const Ideal& I = b.ideal;
  if (opt.json) {
    Json j = to_json(I);
    j["spec"] = spec;
    if (spec.rfind("S(", 0) == 0) j["display_names"] = ScrollType::parse(spec).display_names();
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << spec << ": " << I.generators().size() << " generators in " << I.num_vars() << " variables over GF("
            << opt.prime << ")\n";
  if (spec.rfind("S(", 0) == 0) {
    auto names = ScrollType::parse(spec).display_names();
    std::cout << "variables:";
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << " " << I.ring()->var_names()[i] << "=" << names[i];
    std::cout << "\n";
  }
  for (const auto& n : b.notes) std::cout << "note: " << n << "\n";
  for (const auto& g : I.generators()) std::cout << "  " << g << "\n";
  return kOk;
}

int cmd_analyze(const std::string& input, const Options& opt) {
  BuiltIdeal b = build_ideal(input, {opt.prime, opt.seed});
  AnalyzeOptions ao;
  ao.degree_cap = opt.degree_cap;
  ao.seed = opt.seed;
  VarietyReport r = analyze(b.ideal, ao);
  if (opt.json) {
    Json j;
    j["input"] = input;
    j["prime"] = opt.prime;
    j["seed"] = opt.seed;
    j["notes"] = b.notes;
    j["report"] = to_json(r);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << input << "\n";
    for (const auto& n : b.notes) std::cout << "note: " << n << "\n";
    print_report(std::cout, r);
  }
  return r.all_passed() ? kOk : kCheckFailed;
}

int cmd_reproduce(const std::string& target, const Options& opt) {
  const Manifest manifest = Manifest::parse(embedded::manifest_json);
  const Goldens goldens = Goldens::parse(embedded::goldens_json);
  const auto items = manifest.select(target);
  RunConfig cfg;
  cfg.prime = opt.prime;
  cfg.seed = opt.seed;
  cfg.degree_cap = opt.degree_cap;
  cfg.jobs = opt.jobs;
  const auto results = run_items(items, goldens, cfg);
  bool all = true;
  for (const auto& r : results) all &= r.passed;
  if (opt.json) {
    Json j;
    j["target"] = target;
    j["prime"] = opt.prime;
    j["seed"] = opt.seed;
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    j["items"] = arr;
    j["passed"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << r.id << std::right << std::fixed
                << std::setprecision(3) << std::setw(8) << r.seconds << "s  " << r.expression;
      if (r.report && r.report->theorem_case) std::cout << "  [" << *r.report->theorem_case << "]";
      std::cout << "\n";
      if (!r.note.empty()) std::cout << "      note: " << r.note << "\n";
      for (const auto& n : r.notes) std::cout << "      " << n << "\n";
      for (const auto& f : r.failures) std::cout << "      " << f << "\n";
      if (!r.passed && r.report) {
        std::cout << "      computed:\n" << r.report->betti.to_table();
        if (r.expected_table) std::cout << "      expected:\n" << r.expected_table->to_table();
      }
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::cout << passed << "/" << results.size() << " items passed (" << target << ", p = " << opt.prime << ")\n";
  }
  return all ? kOk : kCheckFailed;
}

int cmd_enumerate(int c, const Options& opt) {
  if (c < 1) throw ParseError("codimension must be >= 1");
  const auto rows = enumerate_scroll_types(c);
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    std::cout << Json{{"c", c}, {"rows", arr}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << std::left << std::setw(4) << "k" << std::setw(22) << "type" << std::setw(6) << "r+1"
            << "dim X\n";
  for (const auto& r : rows)
    std::cout << std::setw(4) << r.type.k() << std::setw(22) << r.type.to_string() << std::setw(6) << r.r_plus_1
              << r.dim_x << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Varieties of almost minimal degree: construction, projection, Betti diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--prime", opt.prime, "coefficient field GF(p), p an odd prime")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for generic choices")->capture_default_str();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--degree-cap", opt.degree_cap, "refuse resolutions of regularity above this")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "parallel reproduce items")->capture_default_str()->check(CLI::PositiveNumber);

  std::string spec, input, target;
  int codim = 0;
  auto* construct = app.add_subcommand("construct", "print generators of a variety");
  construct->add_option("spec", spec, "S(a1,...), veronese, segre22, segre111, pfaffian5, or an expression")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Betti diagram, invariants, case and checks");
  analyze_cmd->add_option("input", input, "expression or ideal file")->required();
  auto* reproduce = app.add_subcommand("reproduce", "compare computed tables with the embedded goldens");
  reproduce->add_option("target", target, "thm2.1 thm2.2 thm2.4 ex4.0..ex4.7 tables-c2..c4 all")->required();
  auto* enumerate = app.add_subcommand("enumerate", "scroll types whose projections have codimension c");
  enumerate->add_option("c", codim, "codimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (opt.prime == 2 || !is_prime(opt.prime)) throw ParseError("--prime must be an odd prime");
    if (opt.degree_cap < 1) throw ParseError("--degree-cap must be positive");
    if (*construct) return cmd_construct(spec, opt);
    if (*analyze_cmd) return cmd_analyze(input, opt);
    if (*reproduce) return cmd_reproduce(target, opt);
    if (*enumerate) return cmd_enumerate(codim, opt);
  } catch (const PointOnVariety& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPointOnVariety;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: embedded data: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
