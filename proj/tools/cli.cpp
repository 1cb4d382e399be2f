#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "muflow/certify.hpp"
#include "muflow/generator.hpp"
#include "muflow/io.hpp"
#include "muflow/solver.hpp"

namespace muflow::cli {

namespace {

constexpr const char* kVersion = "muflow 0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Without paths only the bound can be checked: every cut must separate its
// pair set, and the cut bound must match both the claimed value and the dual.
std::string check_bound_only(const Instance& instance,
                             const ResultDocument& result) {
  const Network& net = instance.net();
  const RealizationTree& real = instance.real();
  for (const TreeArc& a : real.arcs()) {
    const PiSet pi = pi_set(real, net.terminals(), a);
    if (pi.empty() || real.length(a) == 0) continue;
    auto it = result.certificate.cuts.find(a);
    if (it == result.certificate.cuts.end()) {
      return "no cut for tree arc " + instance.tree_vertex_name(a.from) + "->" +
             instance.tree_vertex_name(a.to);
    }
    for (VertexId s : pi.tail_side) {
      if (!it->second.contains(s)) return "cut misses a source terminal";
    }
    for (VertexId t : pi.head_side) {
      if (it->second.contains(t)) return "cut contains a sink terminal";
    }
  }
  const Rational bound = certificate_value(net, real, result.certificate);
  if (bound != result.value) {
    return "certificate bound " + format_rational(bound) +
           " differs from claimed value " + format_rational(result.value);
  }
  const Rational dual = dual_value(net, real);
  if (bound != dual) {
    return "certificate bound " + format_rational(bound) +
           " is not the optimum " + format_rational(dual);
  }
  return {};
}

std::string check_result(const Instance& instance,
                         const ResultDocument& result) {
  if (!result.paths) return check_bound_only(instance, result);
  Multiflow f;
  for (const WeightedPath& p : *result.paths) {
    if (p.weight <= 0) return "path with nonpositive weight";
    f.add_path(p);
  }
  const CertificateReport report = verify_certificate(
      instance.net(), instance.real(), f, result.certificate);
  if (!report.ok()) return to_string(report.status) + ": " + report.reason;
  const Rational value = mu_value(instance.net(), instance.real(), f);
  if (value != result.value) {
    return "paths have value " + format_rational(value) + ", document claims " +
           format_rational(result.value);
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Maximum mu-value integer multiflows with optimality certificates",
      "muflow"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for the solver")
      ->check(CLI::PositiveNumber);

  std::string instance_path;
  std::string out_path;
  bool no_paths = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", instance_path)->required();
  solve_cmd->add_option("--out", out_path, "Write the result here");
  solve_cmd->add_flag("--no-paths", no_paths, "Omit the path decomposition");

  std::string result_path;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check a result document against an instance");
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("result", result_path)->required();

  CLI::App* dual_cmd = app.add_subcommand("dual", "Print the optimal value");
  dual_cmd->add_option("instance", instance_path)->required();

  GeneratorOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--cycles", gen.cycles)->required();
  gen_cmd->add_option("--pairs", gen.pairs)->required();
  gen_cmd->add_option("--leaves", gen.leaves)->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*solve_cmd) {
      const Instance instance = parse_instance(read_file(instance_path));
      SolveOptions options;
      options.threads = threads;
      const SolveOutput result =
          solve(instance.net(), instance.real(), options);
      const std::string text = serialize_result(instance, result, !no_paths);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << text)) {
          throw InputError(InputErrorCode::kInvalidArgument,
                           "cannot write '" + out_path + "'");
        }
      }
    } else if (*verify_cmd) {
      const Instance instance = parse_instance(read_file(instance_path));
      const ResultDocument result =
          parse_result(instance, read_file(result_path));
      const std::string problem = check_result(instance, result);
      if (!problem.empty()) {
        err << "verification failed: " << problem << "\n";
        return kExitVerificationFailed;
      }
      out << "ok " << format_rational(result.value) << "\n";
    } else if (*dual_cmd) {
      const Instance instance = parse_instance(read_file(instance_path));
      out << format_rational(dual_value(instance.net(), instance.real()))
          << "\n";
    } else if (*gen_cmd) {
      out << serialize_instance(generate_instance(gen));
    }
  } catch (const InputError& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace muflow::cli
