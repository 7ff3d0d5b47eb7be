#include "chebsym/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace chebsym {

OdeProblem kepler(double epsilon) {
  if (!(epsilon > -1.0)) throw std::invalid_argument("kepler epsilon must exceed -1");
  const double k = 2.0 * epsilon + epsilon * epsilon;
  const double omega = 1.0 + epsilon;

  OdeProblem p;
  p.dimension = 4;
  p.name = "kepler";
  p.initial = State(4);
  p.initial << 0.0, 1.0 + epsilon, 1.0, 0.0;
  p.energy = [k](const State& z) {
    const double r2 = z(2) * z(2) + z(3) * z(3);
    const double r = std::sqrt(r2);
    return 0.5 * (z(0) * z(0) + z(1) * z(1)) - 1.0 / r - k / (3.0 * r2 * r);
  };
  p.energy_gradient = [k](const State& z) {
    const double r2 = z(2) * z(2) + z(3) * z(3);
    const double r = std::sqrt(r2);
    const double g = 1.0 / (r2 * r) + k / (r2 * r2 * r);
    State grad(4);
    grad << z(0), z(1), g * z(2), g * z(3);
    return grad;
  };
  p.rhs = [k](double, const State& z) {
    const double r2 = z(2) * z(2) + z(3) * z(3);
    const double r = std::sqrt(r2);
    const double g = 1.0 / (r2 * r) + k / (r2 * r2 * r);
    State f(4);
    f << -g * z(2), -g * z(3), z(0), z(1);
    return f;
  };
  p.jacobian = [k](double, const State& z) {
    const Eigen::Vector2d q(z(2), z(3));
    const double r2 = q.squaredNorm();
    const double r = std::sqrt(r2);
    const Eigen::Matrix2d qq = q * q.transpose();
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d hess =
        id / (r2 * r) - 3.0 * qq / (r2 * r2 * r) + k * (id / (r2 * r2 * r) - 5.0 * qq / (r2 * r2 * r2 * r));
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(4, 4);
    jac.block(0, 2, 2, 2) = -hess;
    jac.block(2, 0, 2, 2) = id;
    return jac;
  };
  p.exact = [epsilon, omega](double t) {
    const double a = omega * t;
    State z(4);
    z << -(1.0 + epsilon) * std::sin(a), (1.0 + epsilon) * std::cos(a), std::cos(a), std::sin(a);
    return z;
  };
  return p;
}

OdeProblem harmonic_oscillator() {
  OdeProblem p;
  p.dimension = 2;
  p.name = "oscillator";
  p.initial = State(2);
  p.initial << 0.0, 1.0;
  p.energy = [](const State& z) { return 0.5 * z.squaredNorm(); };
  p.energy_gradient = [](const State& z) { return z; };
  p.rhs = [](double, const State& z) {
    State f(2);
    f << -z(1), z(0);
    return f;
  };
  p.jacobian = [](double, const State&) {
    Eigen::MatrixXd jac(2, 2);
    jac << 0.0, -1.0, 1.0, 0.0;
    return jac;
  };
  p.exact = [](double t) {
    State z(2);
    z << -std::sin(t), std::cos(t);
    return z;
  };
  return p;
}

OdeProblem problem_by_name(const std::string& name, double epsilon) {
  if (name == "kepler") return kepler(epsilon);
  if (name == "oscillator") return harmonic_oscillator();
  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<double> energy_error_series(const TrajectoryRecord& record, const OdeProblem& problem) {
  if (!problem.energy) throw std::invalid_argument("problem has no first integral");
  std::vector<double> out;
  if (record.states.empty()) return out;
  const double h0 = problem.energy(record.states.front());
  out.reserve(record.states.size());
  for (const auto& z : record.states) out.push_back(std::abs(problem.energy(z) - h0));
  return out;
}

std::vector<double> solution_error_series(const TrajectoryRecord& record,
                                          const OdeProblem& problem) {
  if (!problem.exact) throw std::invalid_argument("problem has no exact solution");
  std::vector<double> out;
  out.reserve(record.states.size());
  for (std::size_t n = 0; n < record.states.size(); ++n) {
    out.push_back((record.states[n] - problem.exact(record.times[n])).norm());
  }
  return out;
}

WindowMaxima window_maxima(const std::vector<double>& times, const std::vector<double>& series) {
  if (times.size() != series.size() || times.empty()) {
    throw std::invalid_argument("window maxima need aligned, non-empty series");
  }
  const double mid = 0.5 * (times.front() + times.back());
  WindowMaxima w;
  for (std::size_t n = 0; n < times.size(); ++n) {
    if (times[n] <= mid) {
      w.first = std::max(w.first, series[n]);
    } else {
      w.second = std::max(w.second, series[n]);
    }
  }
  return w;
}

double sample_at(const std::vector<double>& times, const std::vector<double>& series, double t) {
  if (times.empty() || times.size() != series.size()) {
    throw std::invalid_argument("sample_at needs aligned, non-empty series");
  }
  std::size_t best = 0;
  for (std::size_t n = 1; n < times.size(); ++n) {
    if (std::abs(times[n] - t) < std::abs(times[best] - t)) best = n;
  }
  return series[best];
}

BenchmarkRun run_benchmark(const std::string& method, const ButcherTableau& tableau,
                           const OdeProblem& problem, double h, double T,
                           IntegrationConfig config) {
  config.h = h;
  config.n_steps = std::lround(T / h);
  const auto start = std::chrono::steady_clock::now();
  BenchmarkRun run;
  run.record = integrate(tableau, problem, 0.0, problem.initial, config);
  const auto stop = std::chrono::steady_clock::now();

  BenchmarkReport& rep = run.report;
  rep.method = method;
  rep.h = h;
  rep.T = T;
  rep.slope = std::numeric_limits<double>::quiet_NaN();
  rep.wall_seconds = std::chrono::duration<double>(stop - start).count();
  if (problem.energy) {
    const auto w = window_maxima(run.record.times, run.record.energy_error);
    rep.max_energy_err_w1 = w.first;
    rep.max_energy_err_w2 = w.second;
  }
  if (problem.exact) {
    rep.sol_err_half = sample_at(run.record.times, run.record.solution_error, 0.5 * T);
    rep.sol_err_T = run.record.solution_error.back();
  }
  return run;
}

std::vector<BenchmarkRun> run_benchmarks(
    const std::vector<std::pair<std::string, ButcherTableau>>& methods, const OdeProblem& problem,
    double h, double T, IntegrationConfig config) {
  std::vector<std::future<BenchmarkRun>> pending;
  for (const auto& [name, tableau] : methods) {
    pending.push_back(std::async(std::launch::async, [&, name = name, tableau = tableau] {
      return run_benchmark(name, tableau, problem, h, T, config);
    }));
  }
  std::vector<BenchmarkRun> runs;
  for (auto& f : pending) runs.push_back(f.get());
  std::stable_sort(runs.begin(), runs.end(), [](const BenchmarkRun& a, const BenchmarkRun& b) {
    return a.report.method < b.report.method;
  });
  return runs;
}

ConvergenceResult convergence_study(const ButcherTableau& tableau, const OdeProblem& problem,
                                    const std::vector<double>& h_list, double T,
                                    IntegrationConfig config, double floor) {
  if (!problem.exact) throw std::invalid_argument("convergence study needs an exact solution");
  ConvergenceResult res;
  for (double h : h_list) {
    config.h = h;
    config.n_steps = std::lround(T / h);
    const auto rec = integrate(tableau, problem, 0.0, problem.initial, config);
    const double err = (rec.states.back() - problem.exact(rec.times.back())).norm();
    res.h.push_back(h);
    res.error.push_back(err);
    res.retained.push_back(err >= floor);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < res.h.size(); ++i) {
    if (!res.retained[i]) continue;
    const double x = std::log(res.h[i]), y = std::log(res.error[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  res.slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx)
                     : std::numeric_limits<double>::quiet_NaN();
  return res;
}

}  // namespace chebsym
