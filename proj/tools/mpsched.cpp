// mpsched: max-plus project scheduler.
//
// Subcommands solve a scheduling problem read from a JSON problem file:
//   sf-latest     latest starts under start-to-finish constraints
//   ss-earliest   earliest starts under start-to-start constraints
//   mixed-latest  latest starts under both constraint families
//   min-flow      schedules minimizing the maximum flow time
//   algebra       closure / eigen / residual utilities on the raw matrices
//
// Exit codes: 0 exact or family result, 2 approximate result (due dates
// unattainable, band printed), 1 any error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxplus/io.hpp"

namespace {

using maxplus::scheduling::Feasibility;
using maxplus::scheduling::Objective;

struct CommonArgs {
  std::string file;
  double tolerance = -1.0;  // <0: defer to the file's options
  std::string output;
  bool check = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("file", args.file, "problem file (JSON)")->required();
  cmd->add_option("--tolerance", args.tolerance, "comparison tolerance (default 1e-9)");
  cmd->add_option("--output", args.output, "output mode: human|machine")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_flag("--check", args.check, "recheck the result definitionally before printing");
}

struct Resolved {
  maxplus::io::ProblemFile file;
  double tolerance;
  maxplus::io::OutputMode output;
};

Resolved resolve(const CommonArgs& args, std::optional<Objective> forced) {
  Resolved r{maxplus::io::load_problem(args.file), 0.0, maxplus::io::OutputMode::human};
  r.tolerance = args.tolerance >= 0 ? args.tolerance : r.file.options.tolerance;
  r.output = r.file.options.output;
  if (args.output == "human") r.output = maxplus::io::OutputMode::human;
  if (args.output == "machine") r.output = maxplus::io::OutputMode::machine;

  if (forced) {
    if (r.file.declared_objective && *r.file.declared_objective != *forced)
      throw maxplus::ValidationError(
          std::string("problem.objective: file declares '") +
          maxplus::scheduling::to_string(*r.file.declared_objective) +
          "' but the subcommand is '" + maxplus::scheduling::to_string(*forced) + "'");
    r.file.problem.objective = *forced;
  }
  return r;
}

int run_schedule(const CommonArgs& args, Objective objective) {
  Resolved r = resolve(args, objective);
  const auto result = maxplus::scheduling::solve(r.file.problem, r.tolerance);

  if (args.check) {
    std::string why;
    if (!maxplus::scheduling::verify(r.file.problem, result, r.tolerance, &why)) {
      std::cerr << "error: check failed: " << why << "\n";
      return 1;
    }
  }
  std::cout << maxplus::io::emit(result, r.output);
  return result.feasibility == Feasibility::approximate ? 2 : 0;
}

const maxplus::TropMatrix& pick_matrix(const maxplus::scheduling::ProjectProblem& p) {
  if (p.sf) return *p.sf;
  if (p.ss) return *p.ss;
  throw maxplus::ValidationError("problem: needs one of sf, ss");
}

int run_algebra(const CommonArgs& args, const std::string& op) {
  Resolved r = resolve(args, std::nullopt);
  const auto& problem = r.file.problem;
  const maxplus::TropMatrix& a = pick_matrix(problem);
  const bool machine = r.output == maxplus::io::OutputMode::machine;
  nlohmann::ordered_json doc;

  if (op == "closure") {
    const auto s = maxplus::star(a);
    const auto x = maxplus::plus_powers(a);
    if (machine) {
      doc["star"] = maxplus::io::matrix_to_json(s);
      doc["plus"] = maxplus::io::matrix_to_json(x);
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "star:\n";
      for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j)
          std::cout << (j ? " " : "  ") << maxplus::io::scalar_to_display(s(i, j));
        std::cout << "\n";
      }
      std::cout << "plus:\n";
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j)
          std::cout << (j ? " " : "  ") << maxplus::io::scalar_to_display(x(i, j));
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (op == "eigen") {
    const auto sp = maxplus::eigenvectors(a, r.tolerance);
    if (machine) {
      doc["lambda"] = maxplus::io::scalar_to_json(sp.lambda);
      doc["generators"] = maxplus::io::matrix_to_json(sp.eigen_generators);
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "lambda: " << maxplus::io::scalar_to_display(sp.lambda) << "\n";
      std::cout << "generators:\n";
      for (std::size_t i = 0; i < sp.eigen_generators.rows(); ++i) {
        for (std::size_t j = 0; j < sp.eigen_generators.cols(); ++j)
          std::cout << (j ? " " : "  ")
                    << maxplus::io::scalar_to_display(sp.eigen_generators(i, j));
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (op == "residual") {
    if (!problem.due)
      throw maxplus::ValidationError("problem.due: required for algebra residual");
    const auto delta = maxplus::residual(a, *problem.due);
    if (machine) {
      doc["delta"] = maxplus::io::scalar_to_json(delta);
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "delta: " << maxplus::io::scalar_to_display(delta) << "\n";
    }
    return 0;
  }
  throw maxplus::ValidationError("algebra: unknown op '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-plus project scheduler"};
  app.require_subcommand(1);

  CommonArgs sf_args, ss_args, mixed_args, flow_args, alg_args;
  std::string algebra_op;

  add_common(app.add_subcommand("sf-latest",
                                "latest starts under start-to-finish constraints"),
             sf_args);
  add_common(app.add_subcommand("ss-earliest",
                                "earliest starts under start-to-start constraints"),
             ss_args);
  add_common(app.add_subcommand("mixed-latest",
                                "latest starts under both constraint families"),
             mixed_args);
  add_common(app.add_subcommand("min-flow", "minimize the maximum flow time"),
             flow_args);

  auto* alg = app.add_subcommand("algebra", "closure/eigen/residual utilities");
  alg->add_option("op", algebra_op, "one of: closure, eigen, residual")
      ->required()
      ->check(CLI::IsMember({"closure", "eigen", "residual"}));
  add_common(alg, alg_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize usage errors to exit 1; --help keeps exit 0.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("sf-latest")) return run_schedule(sf_args, Objective::sf_latest);
    if (app.got_subcommand("ss-earliest"))
      return run_schedule(ss_args, Objective::ss_earliest);
    if (app.got_subcommand("mixed-latest"))
      return run_schedule(mixed_args, Objective::mixed_latest);
    if (app.got_subcommand("min-flow")) return run_schedule(flow_args, Objective::min_flow);
    if (app.got_subcommand("algebra")) return run_algebra(alg_args, algebra_op);
  } catch (const maxplus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
