// latkit command line: analyze, entropy, audit, gen, iso, export.
//
// Exit codes: 0 success; 1 domain failure (not a lattice, not isomorphic,
// strict violations); 2 usage or parse error; 3 numeric non-convergence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latkit/audit.hpp"
#include "latkit/basis.hpp"
#include "latkit/report.hpp"
#include "latkit/serialize.hpp"
#include "latkit/structure.hpp"
#include "latkit/weighted.hpp"

namespace {

using namespace latkit;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

int exit_code_for(errc code) {
  switch (code) {
    case errc::not_antisymmetric:
    case errc::not_lattice:
      return kExitDomain;
    case errc::no_convergence:
      return kExitNoConvergence;
    default:
      return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lattice_error(errc::parse, "cannot read file", {path});
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw lattice_error(errc::parse, "cannot write file", {out_path});
  out << content;
}

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = 42;
  double tol = 1e-10;
};

int run_analyze(const std::string& file, const GlobalFlags& g) {
  FiniteLattice lat = [&] {
    try {
      return build_lattice(parse_lattice_doc(read_file(file)));
    } catch (const lattice_error& e) {
      if (exit_code_for(e.code()) == kExitDomain) {
        // not a lattice: report the witness instead of a bare error
        if (g.json) std::cout << error_json(e, true) << "\n";
        else std::cerr << e.what() << "\n";
      }
      throw;
    }
  }();
  const auto report = analyze(lat);
  std::cout << (g.json ? analysis_report_json(report) + "\n" : analysis_report_text(report));
  return kExitOk;
}

int run_entropy(const std::string& file, const std::string& mode_name,
                const std::string& base_name, bool strict, bool with_matrix,
                long max_iterations, const GlobalFlags& g) {
  const auto doc = parse_weighted_doc(read_file(file));
  const auto w = WeightedLattice::from_doc(doc);
  const AdjacencyMode mode =
      mode_name == "listed" ? AdjacencyMode::listed : AdjacencyMode::closed;
  const LogBase base = base_name == "2" ? LogBase::two : LogBase::e;

  const auto report = entropy(w, mode, base, SpectralOptions{g.tol, max_iterations});
  std::optional<std::vector<AxiomViolation>> violations;
  if (strict) violations = validate_weighted(w, true);
  std::optional<Matrix> matrix;
  if (with_matrix) matrix = adjacency_matrix(w, mode);

  const auto* vptr = violations ? &*violations : nullptr;
  const auto* mptr = matrix ? &*matrix : nullptr;
  std::cout << (g.json ? entropy_report_json(report, w, vptr, mptr) + "\n"
                       : entropy_report_text(report, w, vptr, mptr));
  return violations && !violations->empty() ? kExitDomain : kExitOk;
}

int run_audit(const std::string& prop, long trials, int max_n, int threads,
              const GlobalFlags& g) {
  AuditOptions opts;
  opts.trials = trials;
  opts.max_n = max_n;
  opts.seed = g.seed;
  opts.threads = threads;
  if (!prop.empty()) {
    const auto id = parse_proposition(prop);
    if (!id) throw lattice_error(errc::param_range, "unknown proposition", {prop});
    std::cout << audit_report_json(audit_proposition(*id, opts)) << "\n";
  } else {
    std::cout << audit_reports_json(audit_all(opts)) << "\n";
  }
  return kExitOk;
}

int run_gen(const std::string& name, int k, const std::string& random_params,
            const std::string& out, const GlobalFlags& g) {
  FiniteLattice lat = [&] {
    if (!random_params.empty()) {
      int gens = 0, m = 0;
      char comma = 0;
      std::istringstream in(random_params);
      if (!(in >> gens >> comma >> m) || comma != ',')
        throw lattice_error(errc::param_range, "--random expects G,M", {random_params});
      return random_lattice(gens, m, g.seed);
    }
    return named_lattice(name, k);
  }();
  write_output(out, lattice_doc_to_json(to_doc(lat)) + "\n");
  return kExitOk;
}

int run_iso(const std::string& file1, const std::string& file2, const GlobalFlags& g) {
  const auto a = build_lattice(parse_lattice_doc(read_file(file1)));
  const auto b = build_lattice(parse_lattice_doc(read_file(file2)));
  const auto result = find_isomorphism(a, b);
  std::cout << (g.json ? iso_result_json(result, a, b) + "\n"
                       : iso_result_text(result, a, b));
  return result.found ? kExitOk : kExitDomain;
}

int run_export(const std::string& file, const std::string& out) {
  const auto lat = build_lattice(parse_lattice_doc(read_file(file)));
  write_output(out, export_dot(lat));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice analysis: basis, structure, entropy, audits"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_option("--seed", g.seed, "seed for random generation and audits");
  app.add_option("--tol", g.tol, "spectral radius tolerance");

  std::string file, file2, out, mode = "closed", base = "e", prop, name, random_params;
  int k = -1, max_n = 10, threads = 1;
  long trials = 100, max_iterations = 1'000'000;
  bool strict = false, with_matrix = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "structural analysis of a lattice file");
  analyze_cmd->add_option("file", file, "lattice JSON document")->required();

  auto* entropy_cmd = app.add_subcommand("entropy", "spectral entropy of a weighted lattice");
  entropy_cmd->add_option("file", file, "weighted JSON document")->required();
  entropy_cmd->add_option("--mode", mode, "adjacency mode")
      ->check(CLI::IsMember({"listed", "closed"}));
  entropy_cmd->add_option("--base", base, "logarithm base")->check(CLI::IsMember({"e", "2"}));
  entropy_cmd->add_flag("--strict", strict, "validate axioms as-listed; violations exit 1");
  entropy_cmd->add_flag("--matrix", with_matrix, "print the adjacency matrix");
  entropy_cmd->add_option("--maxit", max_iterations, "power iteration cap");

  auto* audit_cmd = app.add_subcommand("audit", "empirical proposition audits");
  audit_cmd->add_option("--prop", prop, "single proposition id (e.g. P2_12)");
  audit_cmd->add_option("--trials", trials, "random lattices per proposition");
  audit_cmd->add_option("--max-n", max_n, "size bound for catalog and random lattices");
  audit_cmd->add_option("--threads", threads, "worker threads for random trials");

  auto* gen_cmd = app.add_subcommand("gen", "emit a catalog or random lattice document");
  auto* name_opt = gen_cmd->add_option("--name", name, "catalog name: chain, bool, m, n5");
  gen_cmd->add_option("--k", k, "catalog parameter");
  auto* random_opt =
      gen_cmd->add_option("--random", random_params, "random closure system: G,M");
  gen_cmd->add_option("--out", out, "output path (default stdout)");
  name_opt->excludes(random_opt);

  auto* iso_cmd = app.add_subcommand("iso", "order isomorphism between two lattice files");
  iso_cmd->add_option("file1", file, "first lattice")->required();
  iso_cmd->add_option("file2", file2, "second lattice")->required();

  auto* export_cmd = app.add_subcommand("export", "DOT export of the Hasse diagram");
  export_cmd->add_option("file", file, "lattice JSON document")->required();
  export_cmd->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(file, g);
    if (entropy_cmd->parsed())
      return run_entropy(file, mode, base, strict, with_matrix, max_iterations, g);
    if (audit_cmd->parsed()) return run_audit(prop, trials, max_n, threads, g);
    if (gen_cmd->parsed()) {
      if (name.empty() && random_params.empty())
        throw lattice_error(errc::param_range, "gen needs --name or --random");
      if (!name.empty() && name != "n5" && k < 0)
        throw lattice_error(errc::param_range, "gen --name needs --k");
      return run_gen(name, k, random_params, out, g);
    }
    if (iso_cmd->parsed()) return run_iso(file, file2, g);
    if (export_cmd->parsed()) return run_export(file, out);
  } catch (const lattice_error& e) {
    const int code = exit_code_for(e.code());
    if (g.json && !(analyze_cmd->parsed() && code == kExitDomain)) {
      // analyze already printed its domain-failure JSON
      std::cout << error_json(e, analyze_cmd->parsed() || iso_cmd->parsed() ||
                                     export_cmd->parsed())
                << "\n";
    } else if (!g.json) {
      std::cerr << e.what();
      if (!e.witness().empty()) {
        std::cerr << " [witness:";
        for (const auto& w : e.witness()) std::cerr << " " << w;
        std::cerr << "]";
      }
      std::cerr << "\n";
    }
    return code;
  }
  return kExitUsage;
}
