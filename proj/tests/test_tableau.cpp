#include <cmath>
#include <array>
#include <numbers>

#include "chebsym/tableau.hpp"
#include "doctest.h"

using namespace chebsym;
using std::numbers::pi;

namespace {

const PolynomialFamily cheb1(FamilyKind::ChebyshevFirst);
const PolynomialFamily cheb2(FamilyKind::ChebyshevSecond);

double max_diff(const ButcherTableau& x, const ButcherTableau& y) {
  REQUIRE(x.stages() == y.stages());
  return std::max({(x.A - y.A).cwiseAbs().maxCoeff(), (x.b - y.b).cwiseAbs().maxCoeff(),
                   (x.c - y.c).cwiseAbs().maxCoeff()});
}

// Free parameter value reproducing the gamma-family fixtures.
double table1_mu(double gamma) { return 27 * pi * gamma / (4 * std::sqrt(3.0)); }
double table3_mu(double gamma) { return 9 * pi * gamma / (16 * std::sqrt(2.0)); }

}  // namespace

TEST_CASE("fixture entries") {
  const double g = 0.05;
  CHECK(fixtures::table1(g).A(1, 0) ==
        doctest::Approx((2 + std::sqrt(3.0)) / 18 - 2 * g).epsilon(1e-15));
  CHECK(fixtures::table3(g).A(0, 1) ==
        doctest::Approx((2 - std::sqrt(2.0)) / 12 + g).epsilon(1e-15));
  const auto t2 = fixtures::table2();
  CHECK(t2.c(0) < t2.c(4));
  CHECK(std::abs(t2.b(0) - 0.08389061423334) < 1e-15);
  CHECK_THROWS_AS(fixtures::by_name("nope"), std::invalid_argument);
}

TEST_CASE("symplecticity residual") {
  CHECK(symplecticity_residual(fixtures::midpoint()) == 0.0);
  for (double g : {0.0, 0.05, -0.3}) CHECK(symplecticity_residual(fixtures::table1(g)) <= 1e-13);
  CHECK(symplecticity_residual(fixtures::explicit_euler()) == 1.0);
  CHECK(symplecticity_residual(fixtures::table4()) <= 1e-13);
}

TEST_CASE("symmetry residual") {
  CHECK(symmetry_residual(fixtures::midpoint()) == 0.0);
  CHECK(symmetry_residual(fixtures::table4()) <= 1e-13);
  CHECK(symmetry_residual(fixtures::explicit_euler()) == 1.0);
  CHECK(symmetry_residual(fixtures::rk4()) > 0.1);
}

TEST_CASE("order conditions") {
  const auto mid = order_conditions(fixtures::midpoint(), 3);
  CHECK(mid.max_order_passed() == 2);
  bool bushy_reported = false;
  for (const auto& t : mid.trees) {
    if (t.label == "[t,t]") {
      CHECK(t.residual == doctest::Approx(1.0 / 12).epsilon(1e-14));
      bushy_reported = true;
    }
  }
  CHECK(bushy_reported);

  const auto t1 = order_conditions(fixtures::table1(0.0), 4);
  CHECK(t1.trees.size() == 8);
  CHECK(t1.passes(4));
  CHECK(order_conditions(fixtures::table2()).trees.size() == 37);
  CHECK(order_conditions(fixtures::table2()).max_order_passed() == 6);
  CHECK(order_conditions(fixtures::table4()).max_order_passed() == 6);
  CHECK(order_conditions(fixtures::gauss2()).max_order_passed() == 4);
  CHECK(order_conditions(fixtures::gauss3()).max_order_passed() == 6);
  CHECK(order_conditions(fixtures::rk4()).max_order_passed() == 4);
  CHECK_THROWS_AS(order_conditions(fixtures::midpoint(), 7), std::out_of_range);
}

TEST_CASE("discretization reproduces the midpoint rule") {
  for (const auto& fam : {cheb1, cheb2}) {
    const auto bp = make_blueprint(fam, 2, 1, 1);
    OrderSummary sum;
    const auto t = discretize(bp, gauss_christoffel_rule(fam, 1), &sum);
    CHECK(max_diff(t, fixtures::midpoint()) <= 1e-14);
    CHECK(sum.claimed_order == 2);
    CHECK(t.claimed_order == 2);
  }
}

TEST_CASE("discretization reproduces the printed tables") {
  for (double g : {0.0, 0.05}) {
    const auto t1 =
        discretize(make_blueprint(cheb1, 3, 1, 2, {{"mu1", table1_mu(g)}}), chebyshev1_rule(3));
    CHECK(max_diff(t1, fixtures::table1(g)) <= 1e-12);
    CHECK(t1.claimed_order == 4);
    const auto t3 =
        discretize(make_blueprint(cheb2, 3, 1, 2, {{"mu1", table3_mu(g)}}), chebyshev2_rule(3));
    CHECK(max_diff(t3, fixtures::table3(g)) <= 1e-12);
    CHECK(t3.claimed_order == 4);
  }
  OrderSummary s2, s4;
  const auto t2 = discretize(make_blueprint(cheb1, 5, 2, 2), chebyshev1_rule(5), &s2);
  CHECK(max_diff(t2, fixtures::table2()) <= 1e-11);
  CHECK(s2.continuous_bound == 5);
  CHECK(s2.discrete_bound >= 5);
  CHECK(s2.symmetric);
  CHECK(t2.claimed_order == 6);
  const auto t4 = discretize(make_blueprint(cheb2, 5, 2, 2), chebyshev2_rule(5), &s4);
  CHECK(max_diff(t4, fixtures::table4()) <= 1e-12);
  CHECK(t4.claimed_order == 6);
  CHECK(t4.b(2) == doctest::Approx(13.0 / 45).epsilon(1e-14));
  CHECK(t4.A(2, 2) == doctest::Approx(13.0 / 90).epsilon(1e-14));
}

TEST_CASE("discrete order bounds") {
  CHECK(discrete_order_bound(make_blueprint(cheb1, 2, 1, 1), chebyshev1_rule(1)) == 2);
  CHECK(discrete_order_bound(make_blueprint(cheb1, 3, 1, 2), chebyshev1_rule(3)) >= 3);
  CHECK(discrete_order_bound(make_blueprint(cheb1, 5, 2, 2), chebyshev1_rule(5)) >= 5);
}

TEST_CASE("every discretization is symplectic") {
  const std::pair<const PolynomialFamily*, std::array<int, 3>> cases[] = {
      {&cheb1, {2, 1, 1}}, {&cheb1, {3, 1, 2}}, {&cheb1, {5, 2, 2}},
      {&cheb2, {2, 1, 1}}, {&cheb2, {3, 1, 2}}, {&cheb2, {5, 2, 2}}};
  for (const auto& [fam, p] : cases) {
    const auto bp = make_blueprint(*fam, p[0], p[1], p[2]);
    for (int s = 1; s <= 8; ++s) {
      const auto t = discretize(bp, gauss_christoffel_rule(*fam, s));
      CHECK(symplecticity_residual(t) <= 1e-12);
    }
  }
}

TEST_CASE("family mismatch is rejected") {
  const auto bp = make_blueprint(cheb1, 2, 1, 1);
  CHECK_THROWS_AS(discretize(bp, chebyshev2_rule(1)), std::invalid_argument);
}

TEST_CASE("canonicalization sorts by abscissa") {
  auto t = fixtures::gauss2();
  std::swap(t.b(0), t.b(1));
  std::swap(t.c(0), t.c(1));
  t.A = t.A.colwise().reverse().rowwise().reverse().eval();
  const auto c = canonicalize(t);
  CHECK(max_diff(c, fixtures::gauss2()) == 0.0);
  CHECK(row_sum_residual(fixtures::table4()) <= 1e-15);
  CHECK(fixtures::rk4().explicit_method());
  CHECK_FALSE(fixtures::gauss2().explicit_method());
}
