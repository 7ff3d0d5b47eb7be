#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chebsym/tableau.hpp"

namespace chebsym {

using State = Eigen::VectorXd;

// dz/dt = f(t, z). For Hamiltonian problems the state is (p, q) and
// f = J^{-1} grad H with J = [[0, I], [-I, 0]].
struct OdeProblem {
  int dimension = 0;
  std::function<State(double, const State&)> rhs;
  std::function<Eigen::MatrixXd(double, const State&)> jacobian;  // optional
  std::function<State(double)> exact;                             // optional
  std::function<double(const State&)> energy;                     // optional
  std::function<State(const State&)> energy_gradient;             // optional
  State initial;
  std::string name;

  bool hamiltonian() const { return static_cast<bool>(energy); }
};

enum class StageSolver { FixedPoint, SimplifiedNewton };

struct IntegrationConfig {
  double h = 0.1;
  long n_steps = 0;
  StageSolver solver = StageSolver::FixedPoint;
  double tol = 1e-14;  // relative to 1 + |z|_max
  int max_iters = 100;
};

// Stage equations did not converge or produced a non-finite state.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual, long step_index = -1)
      : std::runtime_error(what), residual_(residual), step_index_(step_index) {}
  double residual() const { return residual_; }
  long step_index() const { return step_index_; }

 private:
  double residual_;
  long step_index_;
};

struct StepResult {
  State z;
  State increment;  // z - z_in = h sum_i b_i f(Z_i)
  int iterations = 0;
  double stage_residual = 0.0;  // max_i |Z_i - z - h sum_j a_ij f(Z_j)|
};

// One step z -> z1 of the implicit RK method. A negative h steps backwards,
// which for a symmetric tableau inverts a forward step.
StepResult step(const ButcherTableau& tableau, const OdeProblem& problem, double t, const State& z,
                const IntegrationConfig& config);

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<int> iterations;  // per step; iterations[0] = 0 for the initial state
  std::vector<double> energy_error;    // |H(z_n) - H(z_0)| when H is known
  std::vector<double> solution_error;  // |z_n - z_exact(t_n)|_2 when known
};

// t_n = t0 + n h. Throws SolverError carrying the failing step index.
TrajectoryRecord integrate(const ButcherTableau& tableau, const OdeProblem& problem, double t0,
                           const State& z0, const IntegrationConfig& config);

// Jacobian of the one-step map by central differences.
Eigen::MatrixXd step_jacobian(const ButcherTableau& tableau, const OdeProblem& problem, double t,
                              const State& z, const IntegrationConfig& config,
                              double fd_eps = 1e-5);

// Canonical structure matrix [[0, I], [-I, 0]] of size 2n.
Eigen::MatrixXd structure_matrix(int dimension);

// max |M^T J M - J|
double symplecticity_defect(const Eigen::MatrixXd& jacobian);

// Central-difference Jacobian of f, used when the problem supplies none.
Eigen::MatrixXd fd_rhs_jacobian(const OdeProblem& problem, double t, const State& z);

}  // namespace chebsym
