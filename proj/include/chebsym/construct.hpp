#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chebsym/orthopoly.hpp"

namespace chebsym {

// Index pair (i, j) of an alpha coefficient, always stored with i < j.
using AlphaPair = std::pair<int, int>;

// No skew-symmetric alpha table satisfies the stage conditions.
class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A free parameter was left unbound when a concrete method was requested.
class UnboundParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FreeParameter {
  std::string name;  // mu1, mu2, ... in lexicographic order of `pair`
  AlphaPair pair;    // the parameter equals alpha(pair.first, pair.second)
  double value = 0.0;
  bool bound = false;  // false when defaulted to zero
};

// Skew-symmetric coefficient table alpha(i, j) = -alpha(j, i), with
// alpha(i, i) = 0 and alpha(i, j) = 0 for i > r or j > r.
class AlphaTable {
 public:
  AlphaTable() = default;
  explicit AlphaTable(int r);

  int r() const { return r_; }
  double operator()(int i, int j) const;
  void set(int i, int j, double value);  // stores alpha(i,j), implies alpha(j,i)

  const std::map<AlphaPair, double>& upper() const { return upper_; }
  std::vector<FreeParameter>& free_parameters() { return free_; }
  const std::vector<FreeParameter>& free_parameters() const { return free_; }

  // Full (r+1) x (r+1) matrix with entry (i, j) = alpha(i, j).
  Eigen::MatrixXd dense() const;

 private:
  int r_ = 0;
  std::map<AlphaPair, double> upper_;
  std::vector<FreeParameter> free_;
};

// Label of one scalar equation: stage condition index k, basis index i.
struct EquationLabel {
  int k;
  int basis_index;
};

// Linear system for the unknown upper-triangle alpha entries: for each
// k < eta, the identity
//   m_k / 2 + sum_{i,j} alpha(i,j) P_i(tau) int_0^1 P_j P_k = int_0^tau P_k
// equated coefficient-wise in {P_i(tau)}.
struct AlphaSystem {
  PolynomialFamily family;
  int xi = 0, eta = 0, rho = 0, r = 0;
  std::vector<AlphaPair> unknowns;  // lexicographic
  std::vector<AlphaPair> forced_zero;
  std::vector<EquationLabel> rows;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

// General solution x = particular + sum_k mu_k * directions[k].
struct ParametricSolution {
  std::vector<AlphaPair> unknowns;
  std::vector<FreeParameter> free;  // pivot-free unknowns, named mu1..
  Eigen::VectorXd particular;       // all free parameters set to zero
  std::vector<Eigen::VectorXd> directions;
  int rank = 0;
};

enum class BindingPolicy { DefaultZero, RequireAll };

// B-hat(tau) = sum_{j < xi} m_j P_j(tau), so B(tau) = B-hat(tau) w(tau).
BasisPoly build_b_hat(const PolynomialFamily& family, int xi);

// Requires rho >= eta >= 1 and xi >= 2 eta. Pairs in `zero_pairs` are
// removed from the unknowns (pinned to zero).
AlphaSystem assemble_system(const PolynomialFamily& family, int xi, int eta, int rho,
                            const std::vector<AlphaPair>& zero_pairs = {});

// Rank detection at 1e-10; throws InconsistentSystem.
ParametricSolution solve_parametric(const AlphaSystem& system);

// Binds free parameters by name ("mu1") or by entry ("alpha(1,2)").
AlphaTable solve_alpha(const AlphaSystem& system,
                       const std::map<std::string, double>& bindings = {},
                       BindingPolicy policy = BindingPolicy::DefaultZero);

// Max |matrix * x - rhs| for the values stored in `alpha`.
double system_residual(const AlphaSystem& system, const AlphaTable& alpha);

// A bound continuous-stage symplectic method with C(tau) = tau:
//   B(tau) = B-hat(tau) w(tau),
//   A(tau, sigma) = B(sigma) (1/2 + sum alpha(i,j) P_i(tau) P_j(sigma)).
struct SymplecticBlueprint {
  PolynomialFamily family;
  int xi = 0, eta = 0, rho = 0;
  AlphaTable alpha;
  BasisPoly b_hat;
  int predicted_order = 0;  // raw continuous bound

  double eval_b_hat(double tau) const { return b_hat(tau); }
  double eval_a_hat(double tau, double sigma) const;
  double eval_B(double tau) const;
  double eval_A(double tau, double sigma) const;

  // Degree of A-hat in tau and in sigma (effective, zero entries dropped).
  int a_hat_degree_tau() const;
  int a_hat_degree_sigma() const;
  int b_hat_degree() const { return b_hat.degree(); }
};

SymplecticBlueprint make_blueprint(const PolynomialFamily& family, int xi, int eta, int rho,
                                   const std::map<std::string, double>& bindings = {},
                                   BindingPolicy policy = BindingPolicy::DefaultZero,
                                   const std::vector<AlphaPair>& zero_pairs = {});

// min(xi, 2 eta + 2, eta + zeta + 1) with zeta = min(xi, eta).
int continuous_order_bound(int xi, int eta);
// Raw bound; a symmetric method rounds an odd bound up to the next even.
int predicted_order(const SymplecticBlueprint& blueprint, bool symmetric = false);

struct ContinuityReport {
  int b_order = 0;  // verified B(kappa) up to the design value xi
  int c_order = 0;  // verified C(kappa) up to eta
  int d_order = 0;  // verified D(kappa) up to min(xi, eta)
  double b_residual = 0.0;
  double c_residual = 0.0;
  double d_residual = 0.0;
  double symplectic_residual = 0.0;
};

ContinuityReport check_continuous(const SymplecticBlueprint& blueprint, double tol = 1e-11);

// Max coefficient of B-hat_t A-hat_{t,s} + B-hat_s A-hat_{s,t} - B-hat_t B-hat_s in
// the tensor basis P_i(t) P_j(s), for an arbitrary (not necessarily skew)
// coefficient matrix.
double symplectic_residual(const PolynomialFamily& family, const BasisPoly& b_hat,
                           const Eigen::MatrixXd& alpha);

}  // namespace chebsym
