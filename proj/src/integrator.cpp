#include "chebsym/integrator.hpp"

#include <cmath>

namespace chebsym {

namespace {

// Stage derivatives F(:, j) = f(t + c_j h, z + D(:, j)).
Eigen::MatrixXd stage_rates(const ButcherTableau& tab, const OdeProblem& problem, double t,
                            double h, const State& z, const Eigen::MatrixXd& increments) {
  const auto s = static_cast<Eigen::Index>(tab.stages());
  Eigen::MatrixXd rates(z.size(), s);
  for (Eigen::Index j = 0; j < s; ++j) {
    rates.col(j) = problem.rhs(t + tab.c(j) * h, z + increments.col(j));
  }
  return rates;
}

void check_finite(const Eigen::MatrixXd& m, double residual) {
  if (!m.allFinite()) throw SolverError("non-finite stage values", residual);
}

}  // namespace

StepResult step(const ButcherTableau& tab, const OdeProblem& problem, double t, const State& z,
                const IntegrationConfig& config) {
  const auto s = static_cast<Eigen::Index>(tab.stages());
  const Eigen::Index d = z.size();
  const double h = config.h;
  const double threshold = config.tol * (1.0 + z.cwiseAbs().maxCoeff());
  const Eigen::MatrixXd hat = h * tab.A.transpose();

  Eigen::MatrixXd increments = Eigen::MatrixXd::Zero(d, s);
  Eigen::MatrixXd rates;
  double change = 0.0;
  int iter = 0;
  bool converged = false;

  if (config.solver == StageSolver::FixedPoint) {
    while (iter < config.max_iters) {
      ++iter;
      rates = stage_rates(tab, problem, t, h, z, increments);
      Eigen::MatrixXd next = rates * hat;
      check_finite(next, change);
      const double previous = change;
      change = (next - increments).cwiseAbs().maxCoeff();
      increments = std::move(next);
      // Past the tolerance, iterate on down to round-off.
      if (converged && (change == 0.0 || change >= previous)) break;
      if (change <= threshold) converged = true;
    }
  } else {
    const Eigen::MatrixXd jac =
        problem.jacobian ? problem.jacobian(t, z) : fd_rhs_jacobian(problem, t, z);
    Eigen::MatrixXd newton = Eigen::MatrixXd::Identity(s * d, s * d);
    for (Eigen::Index i = 0; i < s; ++i) {
      for (Eigen::Index j = 0; j < s; ++j) {
        newton.block(i * d, j * d, d, d) -= h * tab.A(i, j) * jac;
      }
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(newton);
    while (iter < config.max_iters) {
      ++iter;
      rates = stage_rates(tab, problem, t, h, z, increments);
      const Eigen::MatrixXd defect = increments - rates * hat;
      const Eigen::VectorXd delta =
          lu.solve(-Eigen::Map<const Eigen::VectorXd>(defect.data(), s * d));
      const double previous = change;
      change = delta.cwiseAbs().maxCoeff();
      increments += Eigen::Map<const Eigen::MatrixXd>(delta.data(), d, s);
      check_finite(increments, change);
      if (converged && (change == 0.0 || change >= previous)) break;
      if (change <= threshold) converged = true;
    }
  }

  rates = stage_rates(tab, problem, t, h, z, increments);
  const double residual = (increments - rates * hat).cwiseAbs().maxCoeff();
  if (!converged) {
    throw SolverError("stage iteration did not converge in " + std::to_string(config.max_iters) +
                          " iterations (last change " + std::to_string(change) + ")",
                      residual);
  }
  State increment = h * (rates * tab.b);
  StepResult result{z + increment, std::move(increment), iter, residual};
  if (!result.z.allFinite()) throw SolverError("non-finite state after step", residual);
  return result;
}

TrajectoryRecord integrate(const ButcherTableau& tab, const OdeProblem& problem, double t0,
                           const State& z0, const IntegrationConfig& config) {
  if (!(config.h > 0.0)) throw std::invalid_argument("step size must be positive");
  if (!(config.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (config.n_steps < 0) throw std::invalid_argument("negative step count");

  TrajectoryRecord rec;
  const auto n = static_cast<std::size_t>(config.n_steps) + 1;
  rec.times.reserve(n);
  rec.states.reserve(n);
  rec.iterations.reserve(n);
  const double h0 = problem.energy ? problem.energy(z0) : 0.0;

  auto record = [&](double t, const State& z, int iters) {
    rec.times.push_back(t);
    rec.states.push_back(z);
    rec.iterations.push_back(iters);
    if (problem.energy) rec.energy_error.push_back(std::abs(problem.energy(z) - h0));
    if (problem.exact) rec.solution_error.push_back((z - problem.exact(t)).norm());
  };

  record(t0, z0, 0);
  State z = z0;
  // Compensated summation of the increments keeps round-off from drifting.
  State carry = State::Zero(z0.size());
  for (long k = 0; k < config.n_steps; ++k) {
    const double t = t0 + static_cast<double>(k) * config.h;
    StepResult r;
    try {
      r = step(tab, problem, t, z, config);
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " at step " + std::to_string(k), e.residual(), k);
    }
    const State y = r.increment + carry;
    const State next = z + y;
    carry = (z - next) + y;
    z = next;
    record(t0 + static_cast<double>(k + 1) * config.h, z, r.iterations);
  }
  return rec;
}

Eigen::MatrixXd step_jacobian(const ButcherTableau& tab, const OdeProblem& problem, double t,
                              const State& z, const IntegrationConfig& config, double fd_eps) {
  const Eigen::Index d = z.size();
  Eigen::MatrixXd jac(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    State plus = z, minus = z;
    plus(k) += fd_eps;
    minus(k) -= fd_eps;
    jac.col(k) = (step(tab, problem, t, plus, config).z - step(tab, problem, t, minus, config).z) /
                 (2.0 * fd_eps);
  }
  return jac;
}

Eigen::MatrixXd structure_matrix(int dimension) {
  if (dimension % 2 != 0) throw std::invalid_argument("structure matrix needs even dimension");
  const int n = dimension / 2;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dimension, dimension);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return j;
}

double symplecticity_defect(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd j = structure_matrix(static_cast<int>(m.rows()));
  return (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd fd_rhs_jacobian(const OdeProblem& problem, double t, const State& z) {
  const Eigen::Index d = z.size();
  Eigen::MatrixXd jac(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double eps = 1e-7 * std::max(1.0, std::abs(z(k)));
    State plus = z, minus = z;
    plus(k) += eps;
    minus(k) -= eps;
    jac.col(k) = (problem.rhs(t, plus) - problem.rhs(t, minus)) / (2.0 * eps);
  }
  return jac;
}

}  // namespace chebsym
