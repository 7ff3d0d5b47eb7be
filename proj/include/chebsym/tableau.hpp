#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chebsym/construct.hpp"
#include "chebsym/quadrature.hpp"

namespace chebsym {

struct ButcherTableau {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  int claimed_order = 0;
  std::string provenance;

  std::size_t stages() const { return static_cast<std::size_t>(b.size()); }
  bool explicit_method() const;
};

// Reorders stages so that c is ascending. Stage permutations leave the
// method unchanged.
ButcherTableau canonicalize(ButcherTableau tableau);

// max_ij |b_i a_ij + b_j a_ji - b_i b_j|
double symplecticity_residual(const ButcherTableau& t);

// Max deviation from a_{s+1-i,s+1-j} + a_ij = b_j, b_{s+1-i} = b_i,
// c_{s+1-i} = 1 - c_i (stages assumed ascending in c).
double symmetry_residual(const ButcherTableau& t);

// max_i |sum_j a_ij - c_i|
double row_sum_residual(const ButcherTableau& t);

struct TreeResidual {
  int order;
  std::string label;
  double residual;  // |b^T Phi(t) - 1/gamma(t)|
};

struct OrderConditionReport {
  std::vector<TreeResidual> trees;

  // Largest p such that all trees of order <= p are within tol.
  int max_order_passed(double tol = 1e-10) const;
  bool passes(int p, double tol = 1e-10) const { return max_order_passed(tol) >= p; }
};

inline constexpr int kMaxTreeOrder = 6;

// Residuals for all rooted trees of order <= max_order (<= 6).
OrderConditionReport order_conditions(const ButcherTableau& t, int max_order = kMaxTreeOrder);

// min(rho', 2 alpha' + 2, alpha' + beta' + 1) for the quadrature of order p:
//   rho' = min(xi, p - deg B-hat), alpha' = min(eta, p - deg_sigma A-hat),
//   beta' = min(zeta, p - deg_tau A-hat - deg B-hat).
int discrete_order_bound(const SymplecticBlueprint& blueprint, const QuadratureRule& rule);

struct OrderSummary {
  int continuous_bound = 0;
  int discrete_bound = 0;
  int max_order_passed = 0;
  bool symmetric = false;
  int claimed_order = 0;
  std::vector<std::string> warnings;
};

// a_ij = b_j A-hat(c_i, c_j), b_i = b_i B-hat(c_i), c_i from the rule.
// Throws std::invalid_argument on family mismatch.
ButcherTableau discretize(const SymplecticBlueprint& blueprint, const QuadratureRule& rule,
                          OrderSummary* summary = nullptr);

namespace fixtures {

ButcherTableau table1(double gamma);
ButcherTableau table2();
ButcherTableau table3(double gamma);
ButcherTableau table4();
ButcherTableau midpoint();
ButcherTableau gauss2();
ButcherTableau gauss3();
// Non-symplectic controls.
ButcherTableau explicit_euler();
ButcherTableau rk4();

// Looks a fixture up by name; gamma applies to table1/table3.
ButcherTableau by_name(const std::string& name, double gamma = 0.0);
std::vector<std::string> names();

}  // namespace fixtures

}  // namespace chebsym
