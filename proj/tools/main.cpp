#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spex/canonical.hpp"
#include "spex/charpoly.hpp"
#include "spex/families.hpp"
#include "spex/graph6.hpp"
#include "spex/invariants.hpp"
#include "spex/report.hpp"
#include "spex/roots.hpp"
#include "spex/search.hpp"
#include "spex/spectral.hpp"
#include "spex/symmetrize.hpp"
#include "spex/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

double round10(double v) { return std::stod(spex::format_value(v)); }

std::string read_graph6_line(const std::string& file) {
  std::string line;
  if (file.empty()) {
    if (!std::getline(std::cin, line))
      throw std::invalid_argument("no graph6 input on stdin");
  } else {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    if (!std::getline(in, line))
      throw std::invalid_argument("no graph6 input in " + file);
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                           line.back() == ' ' || line.back() == '\t'))
    line.pop_back();
  return line;
}

// "7" or "6-8"
std::pair<int, int> parse_range(const std::string& text) {
  size_t dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range: " + text);
  }
}

spex::ReportFormat parse_format(const std::string& name) {
  if (name == "json") return spex::ReportFormat::json;
  if (name == "csv") return spex::ReportFormat::csv;
  if (name == "text") return spex::ReportFormat::text;
  throw std::invalid_argument("unknown format: " + name);
}

struct GlobalFlags {
  double tol = 1e-10;
  uint64_t seed = 1;
  int jobs = 1;
  std::string format = "text";
};

struct ConstructArgs {
  std::string family;
  int n = 0, r = 0, a = 0, b = 0, x1 = 0, k = 0;
  std::vector<int> parts;
};

int run_construct(const ConstructArgs& args, const GlobalFlags& flags) {
  spex::Graph g;
  if (args.family == "turan") {
    g = spex::turan_graph(args.n, args.r);
  } else if (args.family == "multipartite") {
    g = spex::complete_multipartite(spex::PartSizes(args.parts));
  } else if (args.family == "sk") {
    g = spex::sk_graph(args.a, args.b);
  } else if (args.family == "y") {
    g = spex::y_graph(args.n, args.r);
  } else if (args.family == "lemma42") {
    g = spex::pinched_multipartite(spex::PartSizes(args.parts));
  } else if (args.family == "erdos_family") {
    g = spex::erdos_family_graph(args.n, args.x1);
  } else if (args.family == "split") {
    g = spex::split_graph(args.n, args.k);
  } else {
    throw std::invalid_argument("unknown family: " + args.family);
  }
  std::cout << spex::graph6_encode(g) << "\n";
  ordered_json summary;
  summary["n"] = g.vertex_count();
  summary["m"] = g.edge_count();
  summary["omega"] = spex::clique_number(g);
  summary["chi"] = spex::chromatic_number(g);
  summary["lambda"] = round10(spex::adjacency_radius(g, flags.tol).value);
  summary["q"] = round10(spex::signless_laplacian_radius(g, flags.tol).value);
  std::cout << summary.dump() << "\n";
  return kExitPass;
}

struct SpectrumArgs {
  std::string objective = "lambda";
  std::string file;
  double alpha = 0.5;
  double p = 2.0;
};

int run_spectrum(const SpectrumArgs& args, const GlobalFlags& flags) {
  spex::Graph g = spex::graph6_decode(read_graph6_line(args.file));
  spex::SpectralResult res;
  if (args.objective == "lambda") {
    res = spex::adjacency_radius(g, flags.tol);
  } else if (args.objective == "q") {
    res = spex::signless_laplacian_radius(g, flags.tol);
  } else if (args.objective == "a_alpha") {
    res = spex::a_alpha_radius(g, args.alpha, flags.tol);
  } else if (args.objective == "p") {
    spex::PSpectralOptions opt;
    opt.p = args.p;
    opt.tolerance = flags.tol;
    opt.seed = flags.seed;
    res = spex::p_spectral_radius(g, opt);
  } else {
    throw std::invalid_argument("unknown objective: " + args.objective);
  }
  ordered_json out;
  out["value"] = round10(res.value);
  out["vector"] = ordered_json::array();
  for (double x : res.vector) out["vector"].push_back(round10(x));
  out["residual"] = round10(res.residual);
  out["iterations"] = res.iterations;
  std::cout << out.dump() << "\n";
  return kExitPass;
}

struct CharpolyArgs {
  bool check_identities = false;
  bool signless = false;
  int max_part = 7;
  std::string file;
};

int run_charpoly(const CharpolyArgs& args, const GlobalFlags&) {
  if (args.check_identities) {
    std::vector<spex::IdentityCheck> checks = spex::run_identity_grid(args.max_part);
    std::map<std::string, std::pair<int, int>> tally;  // name -> (pass, total)
    int failures = 0;
    for (const spex::IdentityCheck& c : checks) {
      auto& [pass, total] = tally[c.name];
      ++total;
      if (c.pass) {
        ++pass;
      } else {
        ++failures;
        std::cout << "FAIL " << c.name << " b1=" << c.b1 << " b2=" << c.b2
                  << " b3=" << c.b3 << "\n";
      }
    }
    for (const auto& [name, counts] : tally)
      std::cout << name << " " << counts.first << "/" << counts.second
                << " pass\n";
    std::cout << (failures == 0 ? "all identities pass" : "identity failures")
              << " (" << checks.size() << " checks)\n";
    return failures == 0 ? kExitPass : kExitFail;
  }
  spex::Graph g = spex::graph6_decode(read_graph6_line(args.file));
  spex::Polynomial poly =
      args.signless ? spex::signless_charpoly(g) : spex::adjacency_charpoly(g);
  std::cout << "coefficients:";
  for (const spex::BigInt& c : poly.coeffs()) std::cout << " " << c;
  std::cout << "\n";
  std::cout << "largest_root: " << spex::format_value(spex::largest_real_root(poly))
            << "\n";
  return kExitPass;
}

struct SymmetrizeArgs {
  std::string file;
  int max_steps = 0;
};

void print_trace_steps(const spex::SymmetrizationTrace& trace) {
  int i = 0;
  for (const spex::SymmetrizationStep& st : trace.steps) {
    ordered_json line;
    line["step"] = i++;
    line["op"] = st.op;
    line["u"] = st.u;
    line["v"] = st.v;
    line["lambda_before"] = round10(st.lambda_before);
    line["lambda_after"] = round10(st.lambda_after);
    std::cout << line.dump() << "\n";
  }
}

int run_symmetrize(const SymmetrizeArgs& args, const GlobalFlags&) {
  spex::Graph g = spex::graph6_decode(read_graph6_line(args.file));
  try {
    spex::SymmetrizationTrace trace =
        spex::symmetrize_to_multipartite(g, args.max_steps);
    print_trace_steps(trace);
    std::cout << spex::graph6_encode(trace.final_graph) << "\n";
    return kExitPass;
  } catch (const spex::budget_error& e) {
    print_trace_steps(e.partial);
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

struct VerifyArgs {
  std::string theorem;
  std::string n_range, r_range;
  std::vector<double> p_values, alpha_values;
};

int run_verify(const VerifyArgs& args, const GlobalFlags& flags) {
  spex::VerifyOptions opt;
  if (!args.n_range.empty())
    std::tie(opt.n_lo, opt.n_hi) = parse_range(args.n_range);
  if (!args.r_range.empty())
    std::tie(opt.r_lo, opt.r_hi) = parse_range(args.r_range);
  opt.p_values = args.p_values;
  opt.alpha_values = args.alpha_values;
  opt.jobs = flags.jobs;
  opt.seed = flags.seed;
  spex::VerificationReport rep = spex::verify_theorem(args.theorem, opt);
  std::cout << spex::emit_report(rep, parse_format(flags.format));
  return rep.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal spectral graph theory toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--tol", flags.tol, "solver tolerance")->capture_default_str();
  app.add_option("--seed", flags.seed, "random seed for restarts")
      ->capture_default_str();
  app.add_option("--jobs", flags.jobs, "enumeration worker count")
      ->capture_default_str();
  app.add_option("--format", flags.format, "report format: json|csv|text")
      ->capture_default_str();

  ConstructArgs cargs;
  CLI::App* construct = app.add_subcommand("construct", "build a family graph");
  construct->fallthrough();
  construct->add_option("family", cargs.family,
                        "turan|multipartite|sk|y|lemma42|erdos_family|split")
      ->required();
  construct->add_option("--n", cargs.n, "vertex count");
  construct->add_option("--r", cargs.r, "part count");
  construct->add_option("--a", cargs.a, "first side size");
  construct->add_option("--b", cargs.b, "second side size");
  construct->add_option("--x1", cargs.x1, "size of the X1 split");
  construct->add_option("--k", cargs.k, "clique size");
  construct->add_option("--parts", cargs.parts, "comma-separated part sizes")
      ->delimiter(',');

  SpectrumArgs sargs;
  CLI::App* spectrum = app.add_subcommand("spectrum", "solve a spectral radius");
  spectrum->fallthrough();
  spectrum->add_option("--objective", sargs.objective, "lambda|q|a_alpha|p")
      ->capture_default_str();
  spectrum->add_option("--file", sargs.file, "graph6 input file (default stdin)");
  spectrum->add_option("--alpha", sargs.alpha, "a_alpha parameter")
      ->capture_default_str();
  spectrum->add_option("--p", sargs.p, "p-spectral exponent")
      ->capture_default_str();

  CharpolyArgs pargs;
  CLI::App* charpoly =
      app.add_subcommand("charpoly", "exact characteristic polynomials");
  charpoly->fallthrough();
  charpoly->add_flag("--check-identities", pargs.check_identities,
                     "run the exact identity grid");
  charpoly->add_option("--max", pargs.max_part, "identity grid bound")
      ->capture_default_str();
  charpoly->add_flag("--signless", pargs.signless,
                     "signless Laplacian instead of adjacency");
  charpoly->add_option("--file", pargs.file, "graph6 input file (default stdin)");

  SymmetrizeArgs yargs;
  CLI::App* symmetrize =
      app.add_subcommand("symmetrize", "spectral Zykov symmetrization trace");
  symmetrize->fallthrough();
  symmetrize->add_option("--file", yargs.file, "graph6 input file (default stdin)");
  symmetrize->add_option("--max-steps", yargs.max_steps,
                         "step budget (default n^2)");

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "run a theorem check");
  verify->fallthrough();
  verify->add_option("--theorem", vargs.theorem, "catalog id")->required();
  verify->add_option("--n", vargs.n_range, "vertex range, e.g. 6-7");
  verify->add_option("--r", vargs.r_range, "part range, e.g. 2-3");
  verify->add_option("--p", vargs.p_values, "p values")->delimiter(',');
  verify->add_option("--alpha", vargs.alpha_values, "alpha values")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(cargs, flags);
    if (*spectrum) return run_spectrum(sargs, flags);
    if (*charpoly) return run_charpoly(pargs, flags);
    if (*symmetrize) return run_symmetrize(yargs, flags);
    if (*verify) return run_verify(vargs, flags);
  } catch (const spex::convergence_error& e) {
    std::cerr << "solver failure: " << e.what() << " (residual " << e.residual
              << " after " << e.iterations << " iterations)\n";
    return kExitSolver;
  } catch (const spex::graph6_error& e) {
    std::cerr << "graph6 error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
