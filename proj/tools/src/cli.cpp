#include "konig/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "konig/cli/instance_format.hpp"
#include "konig/cli/json_io.hpp"
#include "konig/generators.hpp"
#include "konig/heritability.hpp"
#include "konig/properties.hpp"
#include "konig/rng.hpp"
#include "konig/solvers.hpp"

namespace konig::cli {

namespace {

/// Input the user supplied that cannot be processed; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(Truth t) {
  switch (t) {
    case Truth::holds: return kHolds;
    case Truth::fails: return kFails;
    case Truth::indeterminate: return kBudgetExceeded;
  }
  return kBudgetExceeded;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file) throw UsageError("cannot write " + path);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string join(const VertexList& xs) { return join(std::vector<std::size_t>(xs.begin(), xs.end())); }

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string property;
  std::string file;
  std::string certificate;
};

int run_check(const CheckArgs& args, const SolveOptions& solve, std::ostream& out, std::ostream& err) {
  const Hypergraph h = read_instance_file(args.file);
  const Property property = *parse_property(args.property);
  Truth truth = Truth::indeterminate;
  std::optional<json> cert;
  std::string detail;

  switch (property) {
    case Property::konig: {
      auto d = has_konig(h, solve);
      truth = d.truth;
      if (d.certificate) {
        cert = certificate_json(h, *d.certificate);
        detail = "matching [" + join(d.certificate->matching.edges) + "] cover [" + join(d.certificate->cover) + "]";
      }
      break;
    }
    case Property::weak_konig: {
      auto d = has_weak_konig(h, solve);
      truth = d.truth;
      detail = "max matching " + std::to_string(d.matching.size()) + ", covering number " +
               std::to_string(d.cover.nu);
      if (truth == Truth::holds) cert = certificate_json(h, d.matching, d.cover);
      break;
    }
    case Property::bipartite: {
      auto d = is_bipartite(h, solve);
      truth = d.truth;
      if (d.bipartition) {
        cert = certificate_json(h, *d.bipartition);
        detail = "side [" + join(d.bipartition->side) + "]";
      }
      break;
    }
    case Property::cp: {
      auto d = has_cp(h, solve);
      truth = d.truth;
      if (d.singleton_edges)
        err << "warning: instance has single-vertex edges; the choosability property is meant for edges of "
               "size > 1\n";
      if (d.transversal) {
        cert = certificate_json(h, *d.transversal);
        detail = "choice [" + join(d.transversal->choice) + "]";
      }
      break;
    }
  }

  out << to_string(property) << ": " << to_string(truth);
  if (!detail.empty()) out << " (" << detail << ")";
  out << '\n';
  if (!args.certificate.empty()) {
    if (cert)
      write_file(args.certificate, to_line(*cert));
    else
      err << "no certificate written: property does not hold\n";
  }
  return exit_for(truth);
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  std::string file;
  bool json = false;
};

int run_solve(const SolveArgs& args, const SolveOptions& solve, std::ostream& out) {
  const Hypergraph h = read_instance_file(args.file);
  json doc;
  std::string text;
  int code = kHolds;
  bool exceeded = false;

  if (args.problem == "matching") {
    auto r = max_matching(h, solve);
    exceeded = r.status != SolveStatus::complete;
    doc = matching_json(r);
    text = "matching size " + std::to_string(r.size()) + ": edges [" + join(r.matching.edges) + "]";
  } else if (args.problem == "cover") {
    auto r = covering_number(h, solve);
    exceeded = r.status != SolveStatus::complete;
    doc = cover_json(r);
    text = "covering number " + std::to_string(r.solution.nu) + ": cover [" + join(r.solution.cover) + "]";
  } else if (args.problem == "transversal") {
    auto r = exact_transversal(h, solve);
    exceeded = r.status != SolveStatus::complete;
    doc = transversal_json(r);
    code = r.transversal ? kHolds : kFails;
    text = r.transversal ? "exact transversal [" + join(r.transversal->choice) + "]" : "no exact transversal";
  } else {
    auto r = bipartition(h, solve);
    exceeded = r.status != SolveStatus::complete;
    doc = bipartition_json(r);
    code = r.bipartition ? kHolds : kFails;
    text = r.bipartition ? "bipartition side [" + join(r.bipartition->side) + "]" : "no bipartition";
  }
  if (exceeded) {
    code = kBudgetExceeded;
    text += " (budget exceeded, not proved)";
  }
  out << (args.json ? to_line(doc) : text + "\n");
  return code;
}

// ---------------------------------------------------------------------------

struct ExploreArgs {
  std::string property;
  std::string file;
  std::size_t max_subset_size = 0;
  std::uint64_t budget = ExploreOptions{}.budget;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json = false;
};

int run_explore(const ExploreArgs& args, const SolveOptions& solve, std::ostream& out) {
  const Hypergraph h = read_instance_file(args.file);
  ExploreOptions options;
  options.max_subset_size = args.max_subset_size;
  options.budget = args.budget;
  options.seed = args.seed;
  options.threads = args.threads;
  options.solve = solve;
  const auto report = explore(h, *parse_property(args.property), options);

  if (args.json) {
    out << to_line(report_json(report));
  } else {
    out << "property: " << to_string(report.property) << '\n'
        << "mode: " << to_string(report.mode);
    if (report.seed) out << " (seed " << *report.seed << ", " << Rng::kAlgorithm << ")";
    out << '\n'
        << "subsets of size <= " << report.max_subset_size << " checked: " << report.subsets_checked << '\n'
        << "all small subfamilies hold: " << (report.all_small_hold ? "yes" : "no") << '\n';
    if (report.smallest_failing_subset)
      out << "smallest failing subfamily: [" << join(report.smallest_failing_subset->indices) << "]\n";
    out << "whole family holds: "
        << (report.whole_indeterminate ? "indeterminate" : report.whole_holds ? "yes" : "no") << '\n';
    if (report.indeterminate_subsets)
      out << "undecided subfamilies (budget exceeded): " << report.indeterminate_subsets << '\n';
  }
  if (report.indeterminate()) return kBudgetExceeded;
  return report.whole_holds ? kHolds : kFails;
}

// ---------------------------------------------------------------------------

struct WitnessArgs {
  std::string kind;
  std::string file;
  bool json = false;
};

int run_witness(const WitnessArgs& args, const SolveOptions& solve, std::ostream& out) {
  const Hypergraph h = read_instance_file(args.file);
  CoreResult r;
  std::string_view kind;
  if (args.kind == "bipartite") {
    r = minimal_nonbipartite_core(h, solve);
    kind = "nonbipartite_core";
  } else if (args.kind == "cp") {
    r = minimal_non_cp_core(h, solve);
    kind = "non_cp_core";
  } else {
    r = cover_critical_core(h, solve);
    kind = "cover_critical_core";
  }
  if (args.json) {
    out << to_line(core_json(kind, r));
  } else if (r.truth == Truth::indeterminate) {
    out << kind << ": budget exceeded\n";
  } else if (r.core) {
    out << kind << ": edges [" << join(r.core->indices) << "]\n";
  } else {
    out << kind << ": none (the hypergraph has the property)\n";
  }
  if (r.truth == Truth::indeterminate) return kBudgetExceeded;
  return r.core ? kHolds : kFails;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& file, const std::string& cert_path, std::ostream& out) {
  const Hypergraph h = read_instance_file(file);
  std::ifstream in(cert_path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + cert_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
  }
  const Check check = verify_certificate(h, doc);
  if (check) {
    out << "valid " << doc["kind"].get<std::string>() << " certificate\n";
    return kHolds;
  }
  out << "invalid: " << to_string(check.fault) << ": " << check.detail << '\n';
  return kFails;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string output;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact deciders for Koenig-type properties of finite hypergraphs", "konig"};
  app.require_subcommand(1);
  app.fallthrough();

  SolveOptions solve;
  app.add_option("--node-budget", solve.node_budget, "Search nodes per solve before giving up (exit 3)")
      ->capture_default_str();

  const std::vector<std::string> properties{"konig", "weak-konig", "bipartite", "cp"};

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide a property; exit 0 if it holds, 1 if not");
  check->add_option("property", check_args.property)->required()->check(CLI::IsMember(properties));
  check->add_option("file", check_args.file, "Instance file")->required();
  check->add_option("--certificate", check_args.certificate, "Write a JSON certificate when the property holds");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Run one exact solver");
  solve_cmd->add_option("problem", solve_args.problem)
      ->required()
      ->check(CLI::IsMember({"matching", "cover", "transversal", "bipartition"}));
  solve_cmd->add_option("file", solve_args.file, "Instance file")->required();
  solve_cmd->add_flag("--json", solve_args.json, "Print one JSON document");

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->require_subcommand(1);
  generate->add_option("-o,--output", gen_args.output, "Output file (default: stdout)");
  struct Family {
    const char* name;
    const char* help;
    std::vector<const char*> params;
  };
  const std::vector<Family> families{
      {"cofinite", "Subsets with complement of size <= k", {"n", "k"}},
      {"large-subsets", "Subsets of size >= m", {"n", "m"}},
      {"affine-lines", "Lines of the affine plane mod p", {"p"}},
      {"complete", "Complete graph", {"n"}},
      {"cycle", "Cycle graph", {"n"}},
      {"path", "Path graph", {"n"}},
      {"random", "Random hypergraph", {"n", "m", "arity", "seed"}},
  };
  std::vector<std::pair<CLI::App*, std::string>> family_cmds;
  std::vector<std::vector<std::uint64_t>> family_values(families.size());
  for (std::size_t i = 0; i < families.size(); ++i) {
    auto* sub = generate->add_subcommand(families[i].name, families[i].help);
    sub->fallthrough();
    family_values[i].resize(families[i].params.size());
    for (std::size_t j = 0; j < families[i].params.size(); ++j)
      sub->add_option(families[i].params[j], family_values[i][j])->required();
    family_cmds.emplace_back(sub, families[i].name);
  }

  ExploreArgs explore_args;
  auto* explore_cmd = app.add_subcommand("explore", "Test a property on all small edge subfamilies and the whole");
  explore_cmd->add_option("property", explore_args.property)->required()->check(CLI::IsMember(properties));
  explore_cmd->add_option("file", explore_args.file, "Instance file")->required();
  explore_cmd->add_option("--max-subset-size", explore_args.max_subset_size)->required();
  explore_cmd->add_option("--budget", explore_args.budget, "Subsets checked before switching to sampling")
      ->capture_default_str();
  explore_cmd->add_option("--seed", explore_args.seed, "Sampling seed")->capture_default_str();
  explore_cmd->add_option("--threads", explore_args.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  explore_cmd->add_flag("--json", explore_args.json, "Print the report as JSON");

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Find a 1-minimal obstruction core");
  witness->add_option("kind", witness_args.kind)->required()->check(CLI::IsMember({"bipartite", "cp", "cover"}));
  witness->add_option("file", witness_args.file, "Instance file")->required();
  witness->add_flag("--json", witness_args.json, "Print one JSON document");

  std::string verify_file, verify_cert;
  auto* verify = app.add_subcommand("verify", "Re-check a JSON certificate against an instance");
  verify->add_option("file", verify_file, "Instance file")->required();
  verify->add_option("certificate", verify_cert, "Certificate JSON")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kHolds : kUsage;
  }

  try {
    if (*check) return run_check(check_args, solve, out, err);
    if (*solve_cmd) return run_solve(solve_args, solve, out);
    if (*explore_cmd) return run_explore(explore_args, solve, out);
    if (*witness) return run_witness(witness_args, solve, out);
    if (*verify) return run_verify(verify_file, verify_cert, out);
    if (*generate) {
      for (std::size_t i = 0; i < family_cmds.size(); ++i) {
        if (!*family_cmds[i].first) continue;
        const auto& v = family_values[i];
        const std::string& name = family_cmds[i].second;
        Hypergraph h;
        std::ostringstream text;
        text << "# konig generate " << name;
        for (auto x : v) text << ' ' << x;
        text << '\n';
        if (name == "cofinite") h = cofinite_family(v[0], v[1]);
        else if (name == "large-subsets") h = large_subsets_family(v[0], v[1]);
        else if (name == "affine-lines") h = affine_lines_family(v[0]);
        else if (name == "complete") h = complete_graph(v[0]);
        else if (name == "cycle") h = cycle_graph(v[0]);
        else if (name == "path") h = path_graph(v[0]);
        else {
          h = random_hypergraph(v[0], v[1], v[2], v[3]);
          text << "# prng " << Rng::kAlgorithm << " seed " << v[3] << '\n';
        }
        text << emit_instance(h);
        if (gen_args.output.empty())
          out << text.str();
        else
          write_file(gen_args.output, text.str());
        return kHolds;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CertificateFormatError& e) {
    err << "error: malformed certificate: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace konig::cli
