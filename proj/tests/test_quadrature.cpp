#include <cmath>
#include <numbers>

#include "chebsym/quadrature.hpp"
#include "doctest.h"

using namespace chebsym;
using std::numbers::pi;

TEST_CASE("first-kind rule examples") {
  const auto r1 = chebyshev1_rule(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r1.weights[0] == doctest::Approx(pi / 2).epsilon(1e-15));

  const auto r3 = chebyshev1_rule(3);
  CHECK(r3.nodes[0] == doctest::Approx((2 - std::sqrt(3.0)) / 4).epsilon(1e-15));
  CHECK(r3.nodes[1] == 0.5);
  CHECK(r3.nodes[2] == doctest::Approx((2 + std::sqrt(3.0)) / 4).epsilon(1e-15));

  const auto r5 = chebyshev1_rule(5);
  CHECK(std::abs(r5.nodes[4] - 0.97552825814758) < 1e-14);
}

TEST_CASE("second-kind rule examples") {
  const auto r1 = chebyshev2_rule(1);
  CHECK(r1.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r1.weights[0] == doctest::Approx(pi / 4).epsilon(1e-15));

  const auto r3 = chebyshev2_rule(3);
  const double r2 = std::sqrt(2.0);
  CHECK(r3.nodes[0] == doctest::Approx((2 - r2) / 4).epsilon(1e-15));
  CHECK(r3.nodes[2] == doctest::Approx((2 + r2) / 4).epsilon(1e-15));
  CHECK(r3.weights[0] == doctest::Approx(pi / 16).epsilon(1e-15));
  CHECK(r3.weights[1] == doctest::Approx(pi / 8).epsilon(1e-15));
  CHECK(r3.weights[2] == doctest::Approx(pi / 16).epsilon(1e-15));

  const auto r5 = chebyshev2_rule(5);
  const double r3v = std::sqrt(3.0);
  const double expected[] = {(2 - r3v) / 4, 0.25, 0.5, 0.75, (2 + r3v) / 4};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(r5.nodes[i] - expected[i]) < 1e-15);
}

TEST_CASE("exactness through degree 2s-1 for s = 1..8") {
  for (int s = 1; s <= 8; ++s) {
    for (const auto& rule : {chebyshev1_rule(s), chebyshev2_rule(s)}) {
      CHECK(rule.exactness_order == 2 * s);
      const auto res = verify_exactness(rule, 2 * s - 1);
      for (double r : res) CHECK(r <= 1e-12);
      for (std::size_t i = 0; i < rule.size(); ++i) {
        CHECK(rule.weights[i] > 0.0);
        CHECK(rule.nodes[i] > 0.0);
        CHECK(rule.nodes[i] < 1.0);
        CHECK(std::abs(rule.nodes[i] + rule.nodes[rule.size() - 1 - i] - 1.0) < 1e-15);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      }
    }
  }
}

TEST_CASE("sharpness at degree 2s") {
  const auto r1 = chebyshev1_rule(1);
  const auto res = verify_exactness(r1, 2);
  CHECK(res[2] == doctest::Approx(3 * pi / 16 - pi / 8).epsilon(1e-14));
  for (int s = 1; s <= 4; ++s) {
    for (const auto& rule : {chebyshev1_rule(s), chebyshev2_rule(s)}) {
      CHECK(verify_exactness(rule, 2 * s).back() > 1e-6);
    }
  }
}

TEST_CASE("rule dispatch by family") {
  const PolynomialFamily cheb2(FamilyKind::ChebyshevSecond);
  const auto rule = gauss_christoffel_rule(cheb2, 4);
  CHECK(rule.family == cheb2);
  CHECK(rule.nodes == chebyshev2_rule(4).nodes);
  CHECK_THROWS(chebyshev1_rule(0));
}
