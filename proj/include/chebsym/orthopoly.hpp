#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace chebsym {

enum class FamilyKind { ChebyshevFirst, ChebyshevSecond };

std::string_view to_string(FamilyKind kind);
// Accepts "cheb1"/"cheb2" as well as the enumerator names.
FamilyKind parse_family_kind(std::string_view text);

// Shifted, orthonormal Chebyshev polynomials on [0,1].
//
//   first kind:  T_0 = sqrt(2/pi), T_n(x) = 2 cos(n acos(2x-1)) / sqrt(pi),
//                w(x) = 1 / (2 sqrt(x - x^2))
//   second kind: U_n(x) = sin((n+1) acos(2x-1)) / sqrt(pi (x - x^2)),
//                w(x) = 2 sqrt(x - x^2)
//
// so that int_0^1 P_j P_k w = delta_jk. All members are pure.
class PolynomialFamily {
 public:
  static constexpr int kDefaultMaxDegree = 16;

  explicit PolynomialFamily(FamilyKind kind, int max_degree = kDefaultMaxDegree);

  FamilyKind kind() const { return kind_; }
  int max_degree() const { return max_degree_; }

  // P_n(x). Trigonometric form in the interior, recurrence at the endpoints.
  double eval(int n, double x) const;
  // P_0(x) .. P_n(x) by the three-term recurrence.
  std::vector<double> eval_all(int n, double x) const;
  // Derivative P_n'(x) by the recurrence.
  double derivative(int n, double x) const;

  // Throws std::domain_error outside (0,1) (first kind) or [0,1] (second kind).
  double weight(double x) const;
  // int_0^1 w(x) dx.
  double weight_mass() const;
  // int_0^1 x^k w(x) dx, closed form.
  double weighted_monomial_moment(int k) const;

  // int_0^1 P_k(t) dt.
  double moment(int k) const;
  // Unweighted int_0^1 P_j(t) P_k(t) dt.
  double product_integral(int j, int k) const;

  // Monomial coefficients (ascending powers of x) of P_n.
  std::vector<double> monomial_coefficients(int n) const;

  friend bool operator==(const PolynomialFamily&, const PolynomialFamily&) = default;

 private:
  double p0() const;
  // Scale mapping the classical polynomial on [-1,1] to the normalized one.
  double scale(int n) const;
  void check_degree(int n) const;

  FamilyKind kind_;
  int max_degree_;
};

// A polynomial expressed in the family basis: sum_j coeffs[j] P_j(x).
struct BasisPoly {
  PolynomialFamily family;
  std::vector<double> coeffs;

  BasisPoly(PolynomialFamily fam, std::vector<double> c);

  double operator()(double x) const;
  // Highest index whose coefficient exceeds tol in magnitude; -1 for zero.
  int degree(double tol = 1e-14) const;
};

// x -> int_0^x P_k(t) dt in the family basis; constant carried by P_0.
BasisPoly running_integral(const PolynomialFamily& family, int k);

std::vector<double> to_monomial(const BasisPoly& poly);
BasisPoly from_monomial(const PolynomialFamily& family, std::span<const double> monomial);

// Horner evaluation of ascending monomial coefficients.
double eval_monomial(std::span<const double> coeffs, double x);

}  // namespace chebsym
