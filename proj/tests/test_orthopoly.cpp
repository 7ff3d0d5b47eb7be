#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "chebsym/orthopoly.hpp"
#include "chebsym/quadrature.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace chebsym;
using std::numbers::pi;

namespace {

const PolynomialFamily cheb1(FamilyKind::ChebyshevFirst);
const PolynomialFamily cheb2(FamilyKind::ChebyshevSecond);

}  // namespace

TEST_CASE("eval examples") {
  CHECK(cheb1.eval(0, 0.3) == doctest::Approx(std::sqrt(2.0 / pi)).epsilon(1e-15));
  CHECK(std::abs(cheb1.eval(1, 0.5)) < 1e-15);
  CHECK(cheb2.eval(0, 0.25) == doctest::Approx(2.0 / std::sqrt(pi)).epsilon(1e-15));
  CHECK(std::abs(cheb2.eval(0, 0.25) - oracle::recurrence(cheb2, 0, 0.25)) < 1e-15);
}

TEST_CASE("eval agrees with the recurrence, including endpoints") {
  for (const auto& fam : {cheb1, cheb2}) {
    for (int n = 0; n <= 16; ++n) {
      for (double x : {0.0, 1e-9, 1e-4, 0.1, 0.37, 0.5, 0.81, 1.0 - 1e-7, 1.0}) {
        const double ref = oracle::recurrence(fam, n, x);
        CHECK(std::abs(fam.eval(n, x) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
      }
      const auto all = fam.eval_all(n, 0.42);
      REQUIRE(all.size() == static_cast<std::size_t>(n + 1));
      CHECK(std::abs(all.back() - fam.eval(n, 0.42)) < 1e-12);
    }
  }
}

TEST_CASE("eval domain and degree cap") {
  CHECK_THROWS_AS(cheb1.eval(2, -0.1), std::domain_error);
  CHECK_THROWS_AS(cheb2.eval(2, 1.1), std::domain_error);
  CHECK_THROWS_AS(cheb1.eval(-1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(running_integral(cheb1, 16), std::out_of_range);
  CHECK_THROWS_AS(cheb2.monomial_coefficients(17), std::out_of_range);
  const PolynomialFamily wide(FamilyKind::ChebyshevFirst, 20);
  CHECK_NOTHROW(running_integral(wide, 16));
}

TEST_CASE("weight examples") {
  CHECK(cheb1.weight(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cheb2.weight(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(cheb1.weight(0.0), std::domain_error);
  CHECK_THROWS_AS(cheb1.weight(1.0), std::domain_error);
  CHECK(cheb2.weight(0.0) == 0.0);
  CHECK(cheb1.weight_mass() == doctest::Approx(pi / 2));
  CHECK(cheb2.weight_mass() == doctest::Approx(pi / 4));
}

TEST_CASE("moment examples") {
  CHECK(std::abs(cheb1.moment(3)) < 1e-16);
  CHECK(cheb1.moment(2) == doctest::Approx(-2.0 / (3.0 * std::sqrt(pi))).epsilon(1e-15));
  CHECK(cheb2.moment(2) == doctest::Approx(2.0 / (3.0 * std::sqrt(pi))).epsilon(1e-15));
}

TEST_CASE("running integral examples") {
  CHECK(running_integral(cheb1, 0)(1.0) == doctest::Approx(std::sqrt(2.0 / pi)).epsilon(1e-14));
  CHECK(std::abs(running_integral(cheb2, 1)(1.0)) < 1e-15);
  for (const auto& fam : {cheb1, cheb2}) {
    for (int k = 0; k <= 12; ++k) CHECK(std::abs(running_integral(fam, k)(0.0)) < 1e-14);
  }
}

TEST_CASE("running integral derivative is P_k") {
  const double h = 1e-5;
  for (const auto& fam : {cheb1, cheb2}) {
    for (int k = 0; k <= 12; ++k) {
      const auto ri = running_integral(fam, k);
      for (int i = 0; i < 20; ++i) {
        const double x = 0.025 + 0.05 * i;
        const double fd = (ri(x + h) - ri(x - h)) / (2 * h);
        CHECK(std::abs(fd - fam.eval(k, x)) < 1e-6);
      }
    }
  }
}

TEST_CASE("product integral examples") {
  CHECK(cheb1.product_integral(1, 1) == doctest::Approx(4.0 / (3.0 * pi)).epsilon(1e-15));
  CHECK(std::abs(cheb1.product_integral(1, 0)) < 1e-16);
  CHECK(std::abs(cheb2.product_integral(1, 0)) < 1e-16);
}

TEST_CASE("closed forms agree with the adaptive oracle") {
  for (const auto& fam : {cheb1, cheb2}) {
    CAPTURE(to_string(fam.kind()));
    for (int k = 0; k <= 12; ++k) {
      CAPTURE(k);
      const double m = oracle::integrate([&](double x) { return fam.eval(k, x); });
      CHECK(std::abs(fam.moment(k) - m) < 1e-11);
      const auto ri = running_integral(fam, k);
      for (double x : {0.1, 0.35, 0.5, 0.9}) {
        const double r = oracle::integrate([&](double t) { return fam.eval(k, t); }, 0.0, x);
        CHECK(std::abs(ri(x) - r) < 1e-11);
      }
      for (int j = 0; j <= 12; ++j) {
        const double p =
            oracle::integrate([&](double x) { return fam.eval(j, x) * fam.eval(k, x); });
        CHECK(std::abs(fam.product_integral(j, k) - p) < 1e-11);
        const double o =
            oracle::weighted(fam, [&](double x) { return fam.eval(j, x) * fam.eval(k, x); });
        CHECK(std::abs(o - (j == k ? 1.0 : 0.0)) < 1e-11);
      }
      const double mm = oracle::weighted(fam, [&](double x) { return std::pow(x, k); });
      CHECK(std::abs(fam.weighted_monomial_moment(k) - mm) < 1e-11);
    }
  }
}

TEST_CASE("P_n has n sign changes in (0,1)") {
  for (const auto& fam : {cheb1, cheb2}) {
    for (int n = 1; n <= 12; ++n) {
      int changes = 0;
      double prev = fam.eval(n, 1e-6);
      for (int i = 1; i <= 4000; ++i) {
        const double x = 1e-6 + (1.0 - 2e-6) * i / 4000.0;
        const double v = fam.eval(n, x);
        if ((v < 0) != (prev < 0)) ++changes;
        prev = v;
      }
      CHECK(changes == n);
    }
  }
}

TEST_CASE("derivative of T_{n+1} is proportional to U_n") {
  // d/dx T_{n+1}(2x-1) = 2 (n+1) U_n(2x-1) for the classical polynomials.
  for (int n = 0; n <= 10; ++n) {
    for (double x : {0.13, 0.5, 0.71}) {
      const double lhs = cheb1.derivative(n + 1, x) / (2.0 / std::sqrt(pi));
      const double rhs = 2.0 * (n + 1) * cheb2.eval(n, x) / (2.0 / std::sqrt(pi));
      CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("U_n equals T'_{n+1} / (2(n+1)) by finite differences") {
  const double h = 1e-6;
  for (int n = 0; n <= 10; ++n) {
    for (double x : {0.13, 0.5, 0.71}) {
      const double fd = (cheb1.eval(n + 1, x + h) - cheb1.eval(n + 1, x - h)) / (2 * h);
      CHECK(std::abs(fd / (2.0 * (n + 1)) - cheb2.eval(n, x)) < 1e-6);
    }
  }
}

TEST_CASE("orthonormality under the family's own Gauss rule") {
  for (const auto& fam : {cheb1, cheb2}) {
    const auto rule = gauss_christoffel_rule(fam, 17);
    for (int j = 0; j <= 16; ++j) {
      for (int k = 0; k <= 16; ++k) {
        const double v = rule.integrate([&](double x) { return fam.eval(j, x) * fam.eval(k, x); });
        CHECK(std::abs(v - (j == k ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("basis and monomial evaluation agree") {
  for (const auto& fam : {cheb1, cheb2}) {
    std::vector<double> coeffs(11, 0.0);
    for (int n = 0; n <= 10; ++n) coeffs[n] = 1.0 / (n + 1);
    const BasisPoly p(fam, coeffs);
    const auto mono = to_monomial(p);
    // Monomial coefficients grow like 6^n, so the attainable accuracy is
    // relative to sum |c_i| x^i rather than to |p(x)|.
    for (double x : {0.0, 0.05, 0.5, 0.93, 1.0}) {
      double cond = 0.0;
      for (std::size_t i = mono.size(); i-- > 0;) cond = cond * x + std::abs(mono[i]);
      CHECK(std::abs(eval_monomial(mono, x) - p(x)) <= 1e-12 * std::max(1.0, 1e-3 * cond));
    }
  }
}

TEST_CASE("monomial conversion") {
  const std::vector<double> one{1.0};
  const auto c = from_monomial(cheb1, one);
  CHECK(c.coeffs[0] == doctest::Approx(std::sqrt(pi / 2)).epsilon(1e-15));
  for (std::size_t i = 1; i < c.coeffs.size(); ++i) CHECK(std::abs(c.coeffs[i]) < 1e-15);

  const auto t1 = to_monomial(BasisPoly(cheb1, {0.0, 1.0}));
  REQUIRE(t1.size() >= 2);
  CHECK(t1[0] == doctest::Approx(-2.0 / std::sqrt(pi)).epsilon(1e-15));
  CHECK(t1[1] == doctest::Approx(4.0 / std::sqrt(pi)).epsilon(1e-15));

  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (const auto& fam : {cheb1, cheb2}) {
    std::vector<double> coeffs(9);
    for (auto& v : coeffs) v = dist(gen);
    const BasisPoly p(fam, coeffs);
    const auto mono = to_monomial(p);
    const auto back = from_monomial(fam, mono);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      CHECK(std::abs(back.coeffs[i] - coeffs[i]) < 1e-10);
    }
    for (double x : {0.0, 0.3, 1.0}) CHECK(std::abs(eval_monomial(mono, x) - p(x)) < 1e-10);
  }
}

TEST_CASE("family names") {
  CHECK(parse_family_kind("cheb1") == FamilyKind::ChebyshevFirst);
  CHECK(parse_family_kind("ChebyshevSecond") == FamilyKind::ChebyshevSecond);
  CHECK_THROWS(parse_family_kind("legendre"));
}
