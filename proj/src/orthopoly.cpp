#include "chebsym/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebsym {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Inside this layer the trigonometric quotient for U_n loses digits to the
// rounding of 2x-1, so the recurrence takes over.
constexpr double kEndpointLayer = 1e-6;

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("polynomial argument outside [0,1]: " + std::to_string(x));
  }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ChebyshevFirst:
      return "ChebyshevFirst";
    case FamilyKind::ChebyshevSecond:
      return "ChebyshevSecond";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "cheb1" || text == "ChebyshevFirst") return FamilyKind::ChebyshevFirst;
  if (text == "cheb2" || text == "ChebyshevSecond") return FamilyKind::ChebyshevSecond;
  throw std::invalid_argument("unknown polynomial family: " + std::string(text));
}

PolynomialFamily::PolynomialFamily(FamilyKind kind, int max_degree)
    : kind_(kind), max_degree_(max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
}

void PolynomialFamily::check_degree(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial degree");
  if (n > max_degree_) {
    throw std::out_of_range("degree " + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_degree_));
  }
}

double PolynomialFamily::p0() const {
  return kind_ == FamilyKind::ChebyshevFirst ? std::sqrt(2.0 / kPi) : 2.0 / kSqrtPi;
}

double PolynomialFamily::scale(int n) const {
  if (kind_ == FamilyKind::ChebyshevFirst && n == 0) return std::sqrt(2.0 / kPi);
  return 2.0 / kSqrtPi;
}

std::vector<double> PolynomialFamily::eval_all(int n, double x) const {
  check_unit_interval(x);
  if (n < 0) throw std::invalid_argument("negative polynomial degree");
  const double y = 2.0 * x - 1.0;
  std::vector<double> classical(static_cast<std::size_t>(n) + 1);
  classical[0] = 1.0;
  if (n >= 1) classical[1] = kind_ == FamilyKind::ChebyshevFirst ? y : 2.0 * y;
  for (int m = 1; m < n; ++m) {
    classical[m + 1] = 2.0 * y * classical[m] - classical[m - 1];
  }
  for (int m = 0; m <= n; ++m) classical[m] *= scale(m);
  return classical;
}

double PolynomialFamily::eval(int n, double x) const {
  check_unit_interval(x);
  if (n < 0) throw std::invalid_argument("negative polynomial degree");
  const double xx = x - x * x;
  if (kind_ == FamilyKind::ChebyshevFirst) {
    if (n == 0) return std::sqrt(2.0 / kPi);
    if (x == 0.0 || x == 1.0) return eval_all(n, x)[n];
    return 2.0 * std::cos(n * std::acos(2.0 * x - 1.0)) / kSqrtPi;
  }
  if (xx < kEndpointLayer) return eval_all(n, x)[n];
  return std::sin((n + 1) * std::acos(2.0 * x - 1.0)) / std::sqrt(kPi * xx);
}

double PolynomialFamily::derivative(int n, double x) const {
  check_unit_interval(x);
  if (n < 0) throw std::invalid_argument("negative polynomial degree");
  if (n == 0) return 0.0;
  const double y = 2.0 * x - 1.0;
  const bool first = kind_ == FamilyKind::ChebyshevFirst;
  // Values and y-derivatives of the classical polynomials.
  double v_prev = 1.0, d_prev = 0.0;
  double v = first ? y : 2.0 * y, d = first ? 1.0 : 2.0;
  for (int m = 1; m < n; ++m) {
    const double v_next = 2.0 * y * v - v_prev;
    const double d_next = 2.0 * v + 2.0 * y * d - d_prev;
    v_prev = v;
    d_prev = d;
    v = v_next;
    d = d_next;
  }
  return 2.0 * scale(n) * d;
}

double PolynomialFamily::weight(double x) const {
  if (kind_ == FamilyKind::ChebyshevFirst) {
    if (!(x > 0.0 && x < 1.0)) {
      throw std::domain_error("first-kind weight is singular outside (0,1)");
    }
    return 1.0 / (2.0 * std::sqrt(x - x * x));
  }
  check_unit_interval(x);
  return 2.0 * std::sqrt(x - x * x);
}

double PolynomialFamily::weight_mass() const {
  return kind_ == FamilyKind::ChebyshevFirst ? kPi / 2.0 : kPi / 4.0;
}

double PolynomialFamily::weighted_monomial_moment(int k) const {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  // a_m = int_0^pi cos^{2m}(theta/2) dtheta = pi C(2m,m) / 4^m.
  auto central = [](int m) {
    double a = kPi;
    for (int i = 0; i < m; ++i) a *= (2.0 * i + 1.0) / (2.0 * i + 2.0);
    return a;
  };
  if (kind_ == FamilyKind::ChebyshevFirst) return 0.5 * central(k);
  return 2.0 * (central(k + 1) - central(k + 2));
}

double PolynomialFamily::moment(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial degree");
  if (kind_ == FamilyKind::ChebyshevFirst) {
    if (k == 0) return std::sqrt(2.0) / kSqrtPi;
    if (k % 2 == 1) return 0.0;
    return 2.0 / (kSqrtPi * (1.0 - static_cast<double>(k) * k));
  }
  return (k % 2 == 0 ? 2.0 : 0.0) / ((k + 1) * kSqrtPi);
}

double PolynomialFamily::product_integral(int j, int k) const {
  if (j < 0 || k < 0) throw std::invalid_argument("negative polynomial degree");
  if (j < k) std::swap(j, k);
  if (kind_ == FamilyKind::ChebyshevFirst) {
    if (k == 0) return std::sqrt(2.0) / kSqrtPi * moment(j);
    if (j == k) return moment(2 * k) / kSqrtPi + 2.0 / kPi;
    return (moment(j + k) + moment(j - k)) / kSqrtPi;
  }
  // U_j U_k expands over U_{j-k+2l}, l = 0..k.
  if ((j + k) % 2 == 1) return 0.0;
  double sum = 0.0;
  for (int l = 0; l <= k; ++l) sum += 2.0 / (j - k + 1 + 2 * l);
  return 2.0 / kPi * sum;
}

std::vector<double> PolynomialFamily::monomial_coefficients(int n) const {
  check_degree(n);
  const bool first = kind_ == FamilyKind::ChebyshevFirst;
  // Classical polynomials in y = 2x - 1, stored as polynomials in x.
  std::vector<std::vector<double>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1.0};
  if (n >= 1) p[1] = first ? std::vector<double>{-1.0, 2.0} : std::vector<double>{-2.0, 4.0};
  for (int m = 1; m < n; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m) + 2, 0.0);
    for (int i = 0; i <= m; ++i) {
      // 2y * p_m = (4x - 2) p_m
      next[i] += -2.0 * p[m][i];
      next[i + 1] += 4.0 * p[m][i];
    }
    for (int i = 0; i < m; ++i) next[i] -= p[m - 1][i];
    p[m + 1] = std::move(next);
  }
  std::vector<double> out = p[n];
  for (double& c : out) c *= scale(n);
  return out;
}

BasisPoly::BasisPoly(PolynomialFamily fam, std::vector<double> c)
    : family(fam), coeffs(std::move(c)) {
  if (coeffs.size() > static_cast<std::size_t>(family.max_degree()) + 1) {
    throw std::out_of_range("basis polynomial exceeds the degree cap");
  }
}

double BasisPoly::operator()(double x) const {
  if (coeffs.empty()) return 0.0;
  const auto values = family.eval_all(static_cast<int>(coeffs.size()) - 1, x);
  double sum = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) sum += coeffs[j] * values[j];
  return sum;
}

int BasisPoly::degree(double tol) const {
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    if (std::abs(coeffs[j]) > tol) return j;
  }
  return -1;
}

BasisPoly running_integral(const PolynomialFamily& family, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial degree");
  if (k + 1 > family.max_degree()) {
    throw std::out_of_range("running integral of degree " + std::to_string(k) +
                            " exceeds the degree cap");
  }
  std::vector<double> c(static_cast<std::size_t>(k) + 2, 0.0);
  const double p0 = family.eval_all(0, 0.5)[0];
  double constant = 0.0;
  if (family.kind() == FamilyKind::ChebyshevFirst) {
    if (k == 0) {
      c[1] = std::sqrt(2.0) / 4.0;
      constant = 1.0 / std::sqrt(2.0 * kPi);
    } else if (k == 1) {
      c[2] = 1.0 / 8.0;
      constant = -1.0 / (4.0 * kSqrtPi);
    } else {
      c[k + 1] = 1.0 / (4.0 * (k + 1));
      c[k - 1] = -1.0 / (4.0 * (k - 1));
      constant = (k % 2 == 1 ? 1.0 : -1.0) / ((static_cast<double>(k) * k - 1.0) * kSqrtPi);
    }
  } else {
    c[k + 1] = 1.0 / (4.0 * (k + 1));
    if (k >= 1) c[k - 1] -= 1.0 / (4.0 * (k + 1));
    constant = (k % 2 == 0 ? 1.0 : -1.0) / ((k + 1) * kSqrtPi);
  }
  c[0] += constant / p0;
  return BasisPoly(family, std::move(c));
}

std::vector<double> to_monomial(const BasisPoly& poly) {
  std::vector<double> out(poly.coeffs.size(), 0.0);
  for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
    if (poly.coeffs[j] == 0.0) continue;
    const auto mono = poly.family.monomial_coefficients(static_cast<int>(j));
    for (std::size_t i = 0; i < mono.size(); ++i) out[i] += poly.coeffs[j] * mono[i];
  }
  return out;
}

BasisPoly from_monomial(const PolynomialFamily& family, std::span<const double> monomial) {
  const int n = static_cast<int>(monomial.size()) - 1;
  if (n > family.max_degree()) {
    throw std::out_of_range("monomial degree exceeds the family degree cap");
  }
  if (n < 0) return BasisPoly(family, {});
  std::vector<double> residual(monomial.begin(), monomial.end());
  std::vector<double> coeffs(residual.size(), 0.0);
  // P_n has a nonzero leading coefficient, so peel degrees from the top.
  for (int d = n; d >= 0; --d) {
    const auto mono = family.monomial_coefficients(d);
    const double c = residual[d] / mono[d];
    coeffs[d] = c;
    for (int i = 0; i <= d; ++i) residual[i] -= c * mono[i];
  }
  return BasisPoly(family, std::move(coeffs));
}

double eval_monomial(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace chebsym
