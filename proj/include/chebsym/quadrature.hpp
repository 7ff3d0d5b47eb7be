#pragma once

#include <vector>

#include "chebsym/orthopoly.hpp"

namespace chebsym {

// Weighted interpolatory rule  int_0^1 phi(x) w(x) dx ~ sum_i b_i phi(c_i).
struct QuadratureRule {
  PolynomialFamily family;
  std::vector<double> nodes;    // ascending, inside (0,1)
  std::vector<double> weights;  // positive
  int exactness_order = 0;      // exact for degree < exactness_order

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& phi) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * phi(nodes[i]);
    return sum;
  }
};

// Shifted Gauss-Christoffel-Chebyshev rule of the first kind (zeros of T_s).
QuadratureRule chebyshev1_rule(int s);
// Shifted Gauss-Christoffel-Chebyshev rule of the second kind (zeros of U_s).
QuadratureRule chebyshev2_rule(int s);
// The s-point Gauss-Christoffel rule of the given family.
QuadratureRule gauss_christoffel_rule(const PolynomialFamily& family, int s);

// Absolute error |sum b_i c_i^k - int x^k w| for k = 0..max_degree.
std::vector<double> verify_exactness(const QuadratureRule& rule, int max_degree);

}  // namespace chebsym
