#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chebsym/integrator.hpp"

namespace chebsym {

// Perturbed Kepler problem, state (p1, p2, q1, q2):
//   H = |p|^2 / 2 - 1/|q| - (2 eps + eps^2) / (3 |q|^3)
// with z0 = (0, 1 + eps, 1, 0) and a closed-form circular solution.
OdeProblem kepler(double epsilon = 0.1);

// H = (p^2 + q^2) / 2, state (p, q), z0 = (0, 1).
OdeProblem harmonic_oscillator();

// "kepler" or "oscillator"; throws std::invalid_argument otherwise.
OdeProblem problem_by_name(const std::string& name, double epsilon = 0.1);

std::vector<double> energy_error_series(const TrajectoryRecord& record, const OdeProblem& problem);
std::vector<double> solution_error_series(const TrajectoryRecord& record,
                                          const OdeProblem& problem);

// Maxima of `series` over t in [t0, t0 + T/2] and (t0 + T/2, t0 + T].
struct WindowMaxima {
  double first = 0.0;
  double second = 0.0;
  double ratio() const { return second / first; }
};
WindowMaxima window_maxima(const std::vector<double>& times, const std::vector<double>& series);

// Value of `series` at the sample nearest to time t.
double sample_at(const std::vector<double>& times, const std::vector<double>& series, double t);

struct BenchmarkReport {
  std::string method;
  double h = 0.0;
  double T = 0.0;
  double max_energy_err_w1 = 0.0;
  double max_energy_err_w2 = 0.0;
  double sol_err_half = 0.0;
  double sol_err_T = 0.0;
  double slope = 0.0;  // NaN when no convergence study was run
  double wall_seconds = 0.0;
};

struct BenchmarkRun {
  BenchmarkReport report;
  TrajectoryRecord record;
};

BenchmarkRun run_benchmark(const std::string& method, const ButcherTableau& tableau,
                           const OdeProblem& problem, double h, double T,
                           IntegrationConfig config = {});

// Runs each method on its own thread; results come back sorted by name.
std::vector<BenchmarkRun> run_benchmarks(
    const std::vector<std::pair<std::string, ButcherTableau>>& methods, const OdeProblem& problem,
    double h, double T, IntegrationConfig config = {});

struct ConvergenceResult {
  std::vector<double> h;
  std::vector<double> error;  // |z_N - z_exact(T)|_2
  std::vector<bool> retained;
  double slope = 0.0;
};

// Least-squares slope of log(error) against log(h); points with error below
// `floor` are discarded.
ConvergenceResult convergence_study(const ButcherTableau& tableau, const OdeProblem& problem,
                                    const std::vector<double>& h_list, double T,
                                    IntegrationConfig config = {}, double floor = 1e-12);

}  // namespace chebsym
