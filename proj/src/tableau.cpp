#include "chebsym/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chebsym/trees.hpp"

namespace chebsym {

namespace {

constexpr double kSymmetryTol = 1e-12;

int upgrade_if_symmetric(int bound, bool symmetric) {
  return symmetric && bound % 2 == 1 ? bound + 1 : bound;
}

std::string provenance_of(const SymplecticBlueprint& bp, const QuadratureRule& rule) {
  std::ostringstream os;
  os.precision(17);
  os << "blueprint " << to_string(bp.family.kind()) << "(" << bp.xi << "," << bp.eta << ","
     << bp.rho << ")";
  for (const auto& fp : bp.alpha.free_parameters()) os << " " << fp.name << "=" << fp.value;
  os << " + " << to_string(rule.family.kind()) << " rule s=" << rule.size();
  return os.str();
}

}  // namespace

bool ButcherTableau::explicit_method() const {
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = i; j < A.cols(); ++j) {
      if (A(i, j) != 0.0) return false;
    }
  }
  return true;
}

ButcherTableau canonicalize(ButcherTableau t) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  std::vector<Eigen::Index> order(static_cast<std::size_t>(s));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) { return t.c(l) < t.c(r); });
  ButcherTableau out = t;
  for (Eigen::Index i = 0; i < s; ++i) {
    out.b(i) = t.b(order[i]);
    out.c(i) = t.c(order[i]);
    for (Eigen::Index j = 0; j < s; ++j) out.A(i, j) = t.A(order[i], order[j]);
  }
  return out;
}

double symplecticity_residual(const ButcherTableau& t) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) {
      worst = std::max(worst, std::abs(t.b(i) * t.A(i, j) + t.b(j) * t.A(j, i) - t.b(i) * t.b(j)));
    }
  }
  return worst;
}

double symmetry_residual(const ButcherTableau& t) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s; ++i) {
    const Eigen::Index mi = s - 1 - i;
    worst = std::max(worst, std::abs(t.b(mi) - t.b(i)));
    worst = std::max(worst, std::abs(t.c(mi) - (1.0 - t.c(i))));
    for (Eigen::Index j = 0; j < s; ++j) {
      worst = std::max(worst, std::abs(t.A(mi, s - 1 - j) + t.A(i, j) - t.b(j)));
    }
  }
  return worst;
}

double row_sum_residual(const ButcherTableau& t) {
  return (t.A.rowwise().sum() - t.c).cwiseAbs().maxCoeff();
}

int OrderConditionReport::max_order_passed(double tol) const {
  int top = 0;
  for (const auto& tr : trees) top = std::max(top, tr.order);
  for (int p = 1; p <= top; ++p) {
    for (const auto& tr : trees) {
      if (tr.order == p && !(tr.residual <= tol)) return p - 1;
    }
  }
  return top;
}

OrderConditionReport order_conditions(const ButcherTableau& t, int max_order) {
  if (max_order < 1 || max_order > kMaxTreeOrder) {
    throw std::out_of_range("order conditions are available for orders 1.." +
                            std::to_string(kMaxTreeOrder));
  }
  const auto trees = rooted_trees(max_order);
  const auto s = static_cast<Eigen::Index>(t.stages());
  // Stage weight vectors: leaf -> ones, tree -> prod over children of A * child.
  std::vector<Eigen::VectorXd> stage(trees.size());
  OrderConditionReport report;
  for (std::size_t n = 0; n < trees.size(); ++n) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(s);
    for (int child : trees[n].children) v = v.cwiseProduct(t.A * stage[child]);
    stage[n] = v;
    const double phi = t.b.dot(v);
    report.trees.push_back({trees[n].order, trees[n].label, std::abs(phi - 1.0 / trees[n].density)});
  }
  return report;
}

int discrete_order_bound(const SymplecticBlueprint& bp, const QuadratureRule& rule) {
  const int p = rule.exactness_order;
  const int deg_b = std::max(bp.b_hat_degree(), 0);
  const int zeta = std::min(bp.xi, bp.eta);
  const int rho = std::min(bp.xi, p - deg_b);
  const int alpha = std::min(bp.eta, p - bp.a_hat_degree_sigma());
  const int beta = std::min(zeta, p - bp.a_hat_degree_tau() - deg_b);
  return std::min({rho, 2 * alpha + 2, alpha + beta + 1});
}

ButcherTableau discretize(const SymplecticBlueprint& bp, const QuadratureRule& rule,
                          OrderSummary* summary) {
  if (rule.family.kind() != bp.family.kind()) {
    throw std::invalid_argument("quadrature family " + std::string(to_string(rule.family.kind())) +
                                " does not match blueprint family " +
                                std::string(to_string(bp.family.kind())));
  }
  const auto s = static_cast<Eigen::Index>(rule.size());
  ButcherTableau t{Eigen::MatrixXd(s, s), Eigen::VectorXd(s), Eigen::VectorXd(s), 0,
                   provenance_of(bp, rule)};
  for (Eigen::Index i = 0; i < s; ++i) {
    t.c(i) = rule.nodes[i];
    t.b(i) = rule.weights[i] * bp.eval_b_hat(rule.nodes[i]);
    for (Eigen::Index j = 0; j < s; ++j) {
      t.A(i, j) = rule.weights[j] * bp.eval_a_hat(rule.nodes[i], rule.nodes[j]);
    }
  }
  t = canonicalize(std::move(t));

  OrderSummary sum;
  sum.symmetric = symmetry_residual(t) <= kSymmetryTol;
  sum.continuous_bound = continuous_order_bound(bp.xi, bp.eta);
  sum.discrete_bound = discrete_order_bound(bp, rule);
  sum.max_order_passed = order_conditions(t).max_order_passed();
  const int bound = std::min(upgrade_if_symmetric(sum.continuous_bound, sum.symmetric),
                             upgrade_if_symmetric(sum.discrete_bound, sum.symmetric));
  sum.claimed_order = std::min(bound, sum.max_order_passed);
  if (sum.max_order_passed < bound) {
    sum.warnings.push_back("order conditions pass only through order " +
                           std::to_string(sum.max_order_passed) + " but the bounds predict " +
                           std::to_string(bound));
  }
  if (sum.continuous_bound != sum.discrete_bound) {
    sum.warnings.push_back("quadrature limits the order: continuous bound " +
                           std::to_string(sum.continuous_bound) + ", discrete bound " +
                           std::to_string(sum.discrete_bound));
  }
  t.claimed_order = sum.claimed_order;
  if (summary) *summary = std::move(sum);
  return t;
}

}  // namespace chebsym
