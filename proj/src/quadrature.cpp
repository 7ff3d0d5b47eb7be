#include "chebsym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chebsym {

namespace {

constexpr double kPi = std::numbers::pi;

void check_stage_count(int s) {
  if (s < 1) throw std::invalid_argument("quadrature needs at least one node");
}

// The closed-form nodes come out descending in i; emit them ascending with
// c and 1 - c paired exactly.
QuadratureRule reversed(QuadratureRule rule) {
  const std::size_t s = rule.nodes.size();
  for (std::size_t i = 0; i < s / 2; ++i) rule.nodes[s - 1 - i] = 1.0 - rule.nodes[i];
  if (s % 2 == 1) rule.nodes[s / 2] = 0.5;
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

}  // namespace

QuadratureRule chebyshev1_rule(int s) {
  check_stage_count(s);
  QuadratureRule rule{PolynomialFamily(FamilyKind::ChebyshevFirst), {}, {}, 2 * s};
  for (int i = 1; i <= s; ++i) {
    rule.nodes.push_back((1.0 + std::cos((2.0 * i - 1.0) * kPi / (2.0 * s))) / 2.0);
    rule.weights.push_back(kPi / (2.0 * s));
  }
  return reversed(std::move(rule));
}

QuadratureRule chebyshev2_rule(int s) {
  check_stage_count(s);
  QuadratureRule rule{PolynomialFamily(FamilyKind::ChebyshevSecond), {}, {}, 2 * s};
  for (int i = 1; i <= s; ++i) {
    const double angle = i * kPi / (s + 1.0);
    const double sn = std::sin(angle);
    rule.nodes.push_back((1.0 + std::cos(angle)) / 2.0);
    rule.weights.push_back(kPi / (2.0 * (s + 1.0)) * sn * sn);
  }
  // Enforce the exact mirror symmetry of weights.
  for (int i = 0; i < s / 2; ++i) {
    const double mean = 0.5 * (rule.weights[i] + rule.weights[s - 1 - i]);
    rule.weights[i] = rule.weights[s - 1 - i] = mean;
  }
  return reversed(std::move(rule));
}

QuadratureRule gauss_christoffel_rule(const PolynomialFamily& family, int s) {
  QuadratureRule rule = family.kind() == FamilyKind::ChebyshevFirst ? chebyshev1_rule(s)
                                                                    : chebyshev2_rule(s);
  rule.family = family;
  return rule;
}

std::vector<double> verify_exactness(const QuadratureRule& rule, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  if (max_degree > 2 * rule.family.max_degree()) {
    throw std::out_of_range("exactness check beyond twice the degree cap");
  }
  std::vector<double> residuals;
  residuals.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) {
    const double approx = rule.integrate([k](double x) { return std::pow(x, k); });
    residuals.push_back(std::abs(approx - rule.family.weighted_monomial_moment(k)));
  }
  return residuals;
}

}  // namespace chebsym
