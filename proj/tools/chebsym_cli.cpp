// chebsym: derive, discretize, verify and benchmark Chebyshev symplectic
// Runge-Kutta methods.
//
// Exit codes: 0 success, 1 verification or solver failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chebsym/bench.hpp"
#include "chebsym/construct.hpp"
#include "chebsym/io.hpp"
#include "chebsym/tableau.hpp"

namespace fs = std::filesystem;
using namespace chebsym;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr double kSymplecticTol = 1e-12;
constexpr double kOrderTol = 1e-10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::map<std::string, double> parse_bindings(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects name=value: " + item);
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--bind value is not a number: " + item);
    }
  }
  return out;
}

std::vector<AlphaPair> parse_pairs(const std::vector<std::string>& items) {
  std::vector<AlphaPair> out;
  for (const auto& item : items) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream is(item);
    if (!(is >> i >> comma >> j) || comma != ',') throw UsageError("--zero expects i,j: " + item);
    out.emplace_back(i, j);
  }
  return out;
}

void print_alpha(const SymplecticBlueprint& bp) {
  std::cout << "family " << to_string(bp.family.kind()) << ", (xi,eta,rho) = (" << bp.xi << ","
            << bp.eta << "," << bp.rho << "), r = " << bp.alpha.r() << "\n";
  for (const auto& [pair, value] : bp.alpha.upper()) {
    std::cout << "  alpha(" << pair.first << "," << pair.second << ") = " << format_real(value)
              << "\n";
  }
  for (const auto& fp : bp.alpha.free_parameters()) {
    std::cout << "  free parameter " << fp.name << " = alpha(" << fp.pair.first << ","
              << fp.pair.second << ") " << (fp.bound ? "bound to " : "unbound, defaulted to ")
              << format_real(fp.value) << "\n";
  }
  std::cout << "  continuous order bound " << bp.predicted_order << "\n";
}

// Prints the verification summary; returns true when every check passes.
bool report_tableau(const ButcherTableau& t, int order) {
  const double m = symplecticity_residual(t);
  const double sym = symmetry_residual(t);
  const auto oc = order_conditions(t, kMaxTreeOrder);
  const int passed = oc.max_order_passed(kOrderTol);
  std::cout << "stages " << t.stages() << ", claimed order " << t.claimed_order << "\n";
  if (!t.provenance.empty()) std::cout << "provenance: " << t.provenance << "\n";
  const bool symplectic = m <= kSymplecticTol;
  std::cout << "M-residual " << sci(m) << (symplectic ? "  PASS" : "  FAIL") << "\n";
  std::cout << "symmetry residual " << sci(sym)
            << (sym <= kSymplecticTol ? "  (symmetric)" : "  (not symmetric)") << "\n";
  std::cout << "row-sum residual " << sci(row_sum_residual(t)) << "\n";
  bool orders_ok = true;
  for (int p = 1; p <= order; ++p) {
    double worst = 0.0;
    for (const auto& tr : oc.trees) {
      if (tr.order == p) worst = std::max(worst, tr.residual);
    }
    const bool ok = worst <= kOrderTol;
    orders_ok = orders_ok && ok;
    std::cout << "order " << p << " conditions: max residual " << sci(worst)
              << (ok ? "  PASS" : "  FAIL") << "\n";
  }
  std::cout << "highest order passed (<= " << kMaxTreeOrder << "): " << passed << "\n";
  return symplectic && orders_ok;
}

std::vector<double> parse_h_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--h-list entry is not a number: " + item);
    }
  }
  if (out.size() < 2) throw UsageError("--h-list needs at least two step sizes");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev symplectic Runge-Kutta methods"};
  // "--h" is the step size, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  // derive
  auto* derive = app.add_subcommand("derive", "solve for a symplectic blueprint");
  std::string family_name;
  int xi = 0, eta = 0, rho = 0;
  std::vector<std::string> binds, zeros;
  bool require_concrete = false;
  std::string derive_out;
  derive->add_option("--family", family_name, "cheb1 or cheb2")->required();
  derive->add_option("--xi", xi, "B order xi")->required();
  derive->add_option("--eta", eta, "C order eta")->required();
  derive->add_option("--rho", rho, "tau degree bound rho")->required();
  derive->add_option("--bind", binds, "bind a free parameter, name=value")->take_all();
  derive->add_option("--zero", zeros, "pin alpha(i,j) to zero, i,j")->take_all();
  derive->add_flag("--require-concrete", require_concrete, "fail if any parameter is unbound");
  derive->add_option("--out", derive_out, "blueprint file")->required();

  // tableau
  auto* tableau = app.add_subcommand("tableau", "discretize a blueprint or emit a fixture");
  std::string blueprint_path, fixture_name, tableau_out, csv_out;
  int stages = 0;
  double gamma = 0.0;
  auto* bp_opt = tableau->add_option("--blueprint", blueprint_path, "blueprint file");
  auto* fx_opt = tableau->add_option("--fixture", fixture_name, "named fixture tableau");
  bp_opt->excludes(fx_opt);
  tableau->add_option("--stages", stages, "quadrature stage count")->needs(bp_opt);
  tableau->add_option("--gamma", gamma, "fixture parameter for table1/table3")->needs(fx_opt);
  tableau->add_option("--out", tableau_out, "tableau file")->required();
  tableau->add_option("--csv", csv_out, "also export A/b/c as CSV");

  // verify
  auto* verify = app.add_subcommand("verify", "check symplecticity, symmetry and order");
  std::string verify_path;
  int verify_order = 0;
  verify->add_option("--tableau", verify_path, "tableau file")->required();
  verify->add_option("--order", verify_order, "order to check (default: claimed, max 6)");

  // integrate
  auto* integrate_cmd = app.add_subcommand("integrate", "integrate a problem, write a CSV");
  std::string int_tableau, int_problem = "kepler", int_out, solver_name = "fixed-point";
  double int_eps = 0.1, int_h = 0.1;
  long int_steps = 100;
  integrate_cmd->add_option("--tableau", int_tableau, "tableau file")->required();
  integrate_cmd->add_option("--problem", int_problem, "kepler or oscillator");
  integrate_cmd->add_option("--eps", int_eps, "Kepler perturbation");
  integrate_cmd->add_option("--h", int_h, "step size");
  integrate_cmd->add_option("--steps", int_steps, "number of steps");
  integrate_cmd->add_option("--solver", solver_name, "fixed-point or newton");
  integrate_cmd->add_option("--out", int_out, "trajectory CSV")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "long-time energy/solution error benchmark");
  std::vector<std::string> bench_tableaux;
  std::string bench_problem = "kepler", bench_out;
  double bench_eps = 0.1, bench_h = 0.1, bench_T = 1000.0;
  bench->add_option("--tableau", bench_tableaux, "tableau file(s)")->required()->take_all();
  bench->add_option("--problem", bench_problem, "kepler or oscillator");
  bench->add_option("--eps", bench_eps, "Kepler perturbation");
  bench->add_option("--h", bench_h, "step size");
  bench->add_option("--T", bench_T, "final time");
  bench->add_option("--out", bench_out, "output directory")->required();

  // convergence
  auto* conv = app.add_subcommand("convergence", "fit the empirical convergence order");
  std::string conv_tableau, conv_problem = "kepler", h_list = "0.2,0.1,0.05,0.025";
  double conv_eps = 0.1, conv_T = 10.0;
  conv->add_option("--tableau", conv_tableau, "tableau file")->required();
  conv->add_option("--problem", conv_problem, "kepler or oscillator");
  conv->add_option("--eps", conv_eps, "Kepler perturbation");
  conv->add_option("--h-list", h_list, "comma-separated step sizes");
  conv->add_option("--T", conv_T, "final time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*derive) {
      const PolynomialFamily family(parse_family_kind(family_name));
      if (eta < 1 || rho < eta || xi < 2 * eta) {
        throw UsageError("ansatz requires rho >= eta >= 1 and xi >= 2 eta");
      }
      const auto bindings = parse_bindings(binds);
      const auto bp = [&] {
        try {
          return make_blueprint(family, xi, eta, rho, bindings, BindingPolicy::DefaultZero,
                                parse_pairs(zeros));
        } catch (const InconsistentSystem& e) {
          throw InconsistentSystem("no symplectic alpha table for (xi,eta,rho) = (" +
                                   std::to_string(xi) + "," + std::to_string(eta) + "," +
                                   std::to_string(rho) + "): " + e.what());
        }
      }();
      print_alpha(bp);
      const auto check = check_continuous(bp);
      std::cout << "  continuous checks: B(" << check.b_order << ") C(" << check.c_order << ") D("
                << check.d_order << "), symplectic residual " << sci(check.symplectic_residual)
                << "\n";
      save_blueprint(derive_out, bp);
      std::cout << "wrote " << derive_out << "\n";
      bool unbound = false;
      for (const auto& fp : bp.alpha.free_parameters()) unbound = unbound || !fp.bound;
      if (require_concrete && unbound) {
        std::cerr << "error: free parameters remain unbound\n";
        return kFailure;
      }
      return kOk;
    }

    if (*tableau) {
      ButcherTableau t;
      if (!blueprint_path.empty()) {
        if (stages < 1) throw UsageError("--stages must be at least 1");
        const auto bp = load_blueprint(blueprint_path);
        OrderSummary summary;
        t = discretize(bp, gauss_christoffel_rule(bp.family, stages), &summary);
        std::cout << "order bounds: continuous " << summary.continuous_bound << ", discrete "
                  << summary.discrete_bound << (summary.symmetric ? ", symmetric" : "") << "\n";
        for (const auto& w : summary.warnings) std::cout << "warning: " << w << "\n";
      } else if (!fixture_name.empty()) {
        t = fixtures::by_name(fixture_name, gamma);
      } else {
        throw UsageError("tableau needs --blueprint or --fixture");
      }
      save_tableau(tableau_out, t);
      if (!csv_out.empty()) {
        std::ofstream os(csv_out);
        write_tableau_csv(os, t);
      }
      const bool ok = report_tableau(t, std::min(std::max(t.claimed_order, 1), kMaxTreeOrder));
      std::cout << "wrote " << tableau_out << "\n";
      return ok ? kOk : kFailure;
    }

    if (*verify) {
      if (verify_order < 0 || verify_order > kMaxTreeOrder) {
        throw UsageError("--order must be between 1 and " + std::to_string(kMaxTreeOrder));
      }
      const auto t = load_tableau(verify_path);
      const int order =
          verify_order > 0 ? verify_order : std::min(std::max(t.claimed_order, 1), kMaxTreeOrder);
      const bool ok = report_tableau(t, order);
      std::cout << (ok ? "result: PASS" : "result: FAIL") << "\n";
      return ok ? kOk : kFailure;
    }

    if (*integrate_cmd) {
      const auto problem = problem_by_name(int_problem, int_eps);
      IntegrationConfig config;
      config.h = int_h;
      config.n_steps = int_steps;
      if (solver_name == "fixed-point") {
        config.solver = StageSolver::FixedPoint;
      } else if (solver_name == "newton") {
        config.solver = StageSolver::SimplifiedNewton;
      } else {
        throw UsageError("unknown solver: " + solver_name);
      }
      const auto t = load_tableau(int_tableau);
      const auto rec = integrate(t, problem, 0.0, problem.initial, config);
      std::ofstream os(int_out);
      write_trajectory_csv(os, rec);
      std::cout << "wrote " << rec.states.size() << " rows to " << int_out << "\n";
      return kOk;
    }

    if (*bench) {
      const auto problem = problem_by_name(bench_problem, bench_eps);
      std::vector<std::pair<std::string, ButcherTableau>> methods;
      for (const auto& path : bench_tableaux) {
        methods.emplace_back(fs::path(path).stem().string(), load_tableau(path));
      }
      fs::create_directories(bench_out);
      const auto runs = run_benchmarks(methods, problem, bench_h, bench_T);
      std::vector<BenchmarkReport> reports;
      for (const auto& run : runs) {
        std::ofstream os(fs::path(bench_out) / (run.report.method + "_trajectory.csv"));
        write_trajectory_csv(os, run.record);
        reports.push_back(run.report);
        const auto& r = run.report;
        std::cout << r.method << ": energy error max " << sci(r.max_energy_err_w1) << " / "
                  << sci(r.max_energy_err_w2) << " (ratio "
                  << sci(r.max_energy_err_w2 / r.max_energy_err_w1) << "), solution error "
                  << sci(r.sol_err_half) << " at T/2, " << sci(r.sol_err_T) << " at T\n";
      }
      {
        std::ofstream os(fs::path(bench_out) / "summary.csv");
        write_summary_csv(os, reports);
      }
      {
        std::ofstream os(fs::path(bench_out) / "errors_long.csv");
        write_long_csv(os, runs);
      }
      {
        std::ofstream os(fs::path(bench_out) / "plot.gp");
        write_gnuplot_script(os, "errors_long.csv", runs);
      }
      std::cout << "wrote " << bench_out << "/summary.csv\n";
      return kOk;
    }

    if (*conv) {
      const auto problem = problem_by_name(conv_problem, conv_eps);
      const auto hs = parse_h_list(h_list);
      const auto t = load_tableau(conv_tableau);
      const auto res = convergence_study(t, problem, hs, conv_T);
      for (std::size_t i = 0; i < res.h.size(); ++i) {
        std::cout << "h " << format_real(res.h[i]) << "  error " << sci(res.error[i])
                  << (res.retained[i] ? "" : "  (below floor, discarded)") << "\n";
      }
      std::cout << "slope " << format_real(res.slope) << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistentSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
