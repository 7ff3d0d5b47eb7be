#include "chebsym/construct.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "chebsym/quadrature.hpp"

namespace chebsym {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kConsistencyTol = 1e-9;

std::string describe(int xi, int eta, int rho) {
  std::ostringstream os;
  os << "(xi,eta,rho)=(" << xi << "," << eta << "," << rho << ")";
  return os.str();
}

int numerical_rank(const Eigen::MatrixXd& m) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = kRankTol * std::max(1.0, sv(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cutoff ? 1 : 0;
  return rank;
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m, const std::vector<int>& cols) {
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(c) = m.col(cols[c]);
  return out;
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs) {
  if (m.cols() == 0) return Eigen::VectorXd(0);
  return m.colPivHouseholderQr().solve(rhs);
}

// Largest kappa <= design such that residuals[0..kappa-1] are within tol.
int verified_order(const std::vector<double>& residuals, double tol) {
  int order = 0;
  for (double r : residuals) {
    if (r > tol) break;
    ++order;
  }
  return order;
}

}  // namespace

AlphaTable::AlphaTable(int r) : r_(r) {
  if (r < 0) throw std::invalid_argument("negative alpha table size");
}

double AlphaTable::operator()(int i, int j) const {
  if (i == j) return 0.0;
  const bool swapped = i > j;
  const auto it = upper_.find(swapped ? AlphaPair{j, i} : AlphaPair{i, j});
  if (it == upper_.end()) return 0.0;
  return swapped ? -it->second : it->second;
}

void AlphaTable::set(int i, int j, double value) {
  if (i == j) throw std::invalid_argument("diagonal alpha entries are fixed at zero");
  if (i < 0 || j < 0 || i > r_ || j > r_) {
    throw std::out_of_range("alpha index outside the table");
  }
  if (i < j) {
    upper_[{i, j}] = value;
  } else {
    upper_[{j, i}] = -value;
  }
}

Eigen::MatrixXd AlphaTable::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r_ + 1, r_ + 1);
  for (const auto& [pair, value] : upper_) {
    m(pair.first, pair.second) = value;
    m(pair.second, pair.first) = -value;
  }
  return m;
}

BasisPoly build_b_hat(const PolynomialFamily& family, int xi) {
  if (xi < 1) throw std::invalid_argument("xi must be at least 1");
  if (xi - 1 > family.max_degree()) throw std::out_of_range("xi exceeds the degree cap");
  std::vector<double> coeffs(static_cast<std::size_t>(xi));
  for (int j = 0; j < xi; ++j) coeffs[j] = family.moment(j);
  return BasisPoly(family, std::move(coeffs));
}

AlphaSystem assemble_system(const PolynomialFamily& family, int xi, int eta, int rho,
                            const std::vector<AlphaPair>& zero_pairs) {
  if (eta < 1 || rho < eta || xi < 2 * eta) {
    throw std::invalid_argument("ansatz requires rho >= eta >= 1 and xi >= 2 eta, got " +
                                describe(xi, eta, rho));
  }
  if (xi - 1 > family.max_degree() || rho > family.max_degree()) {
    throw std::out_of_range("ansatz degree exceeds the cap for " + describe(xi, eta, rho));
  }

  AlphaSystem sys{family, xi, eta, rho, std::min(rho, xi - eta), {}, {}, {}, {}, {}};
  for (auto [i, j] : zero_pairs) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 0 || j > sys.r) {
      throw std::invalid_argument("zero binding outside the free alpha entries");
    }
    sys.forced_zero.emplace_back(i, j);
  }
  for (int i = 0; i <= sys.r; ++i) {
    for (int j = i + 1; j <= sys.r; ++j) {
      if (std::find(sys.forced_zero.begin(), sys.forced_zero.end(), AlphaPair{i, j}) ==
          sys.forced_zero.end()) {
        sys.unknowns.emplace_back(i, j);
      }
    }
  }

  const int basis_top = std::max(rho, eta);
  const int n_rows = eta * (basis_top + 1);
  sys.matrix = Eigen::MatrixXd::Zero(n_rows, static_cast<Eigen::Index>(sys.unknowns.size()));
  sys.rhs = Eigen::VectorXd::Zero(n_rows);
  const double p0 = family.eval_all(0, 0.5)[0];

  int row = 0;
  for (int k = 0; k < eta; ++k) {
    const BasisPoly target = running_integral(family, k);
    for (int i = 0; i <= basis_top; ++i, ++row) {
      sys.rows.push_back({k, i});
      double rhs = i < static_cast<int>(target.coeffs.size()) ? target.coeffs[i] : 0.0;
      if (i == 0) rhs -= 0.5 * family.moment(k) / p0;
      sys.rhs(row) = rhs;
      for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
        const auto [a, b] = sys.unknowns[u];
        // alpha(a,b) P_a(tau) I(b,k) + alpha(b,a) P_b(tau) I(a,k)
        if (i == a) sys.matrix(row, u) += family.product_integral(b, k);
        if (i == b) sys.matrix(row, u) -= family.product_integral(a, k);
      }
    }
  }
  return sys;
}

ParametricSolution solve_parametric(const AlphaSystem& system) {
  ParametricSolution sol;
  sol.unknowns = system.unknowns;
  const auto n = static_cast<int>(system.unknowns.size());

  // Scan columns left to right; a column that does not raise the rank is free.
  std::vector<int> pivots, frees;
  for (int c = 0; c < n; ++c) {
    auto trial = pivots;
    trial.push_back(c);
    if (numerical_rank(select_columns(system.matrix, trial)) > static_cast<int>(pivots.size())) {
      pivots = std::move(trial);
    } else {
      frees.push_back(c);
    }
  }
  sol.rank = static_cast<int>(pivots.size());

  const Eigen::MatrixXd mp = select_columns(system.matrix, pivots);
  const Eigen::VectorXd xp = least_squares(mp, system.rhs);
  const Eigen::VectorXd residual = (pivots.empty() ? Eigen::VectorXd(-system.rhs)
                                                   : Eigen::VectorXd(mp * xp - system.rhs));
  const double scale = std::max(1.0, system.rhs.cwiseAbs().maxCoeff());
  if (residual.size() > 0 && residual.cwiseAbs().maxCoeff() > kConsistencyTol * scale) {
    throw InconsistentSystem(
        "no skew-symmetric alpha table satisfies the stage conditions for " +
        describe(system.xi, system.eta, system.rho) + " in family " +
        std::string(to_string(system.family.kind())));
  }

  sol.particular = Eigen::VectorXd::Zero(n);
  for (std::size_t p = 0; p < pivots.size(); ++p) sol.particular(pivots[p]) = xp(p);

  for (std::size_t f = 0; f < frees.size(); ++f) {
    const int col = frees[f];
    Eigen::VectorXd dir = Eigen::VectorXd::Zero(n);
    dir(col) = 1.0;
    const Eigen::VectorXd dp = least_squares(mp, -system.matrix.col(col));
    for (std::size_t p = 0; p < pivots.size(); ++p) dir(pivots[p]) = dp(p);
    sol.directions.push_back(std::move(dir));
    sol.free.push_back({"mu" + std::to_string(f + 1), system.unknowns[col], 0.0, false});
  }
  return sol;
}

AlphaTable solve_alpha(const AlphaSystem& system, const std::map<std::string, double>& bindings,
                       BindingPolicy policy) {
  ParametricSolution sol = solve_parametric(system);

  static const std::regex entry_pattern(R"(alpha\((\d+),(\d+)\))");
  for (const auto& [name, value] : bindings) {
    bool matched = false;
    std::smatch m;
    const bool is_entry = std::regex_match(name, m, entry_pattern);
    for (auto& fp : sol.free) {
      if (name == fp.name) {
        fp.value = value;
        fp.bound = matched = true;
      } else if (is_entry) {
        const int i = std::stoi(m[1]), j = std::stoi(m[2]);
        if (AlphaPair{i, j} == fp.pair) {
          fp.value = value;
          fp.bound = matched = true;
        } else if (AlphaPair{j, i} == fp.pair) {
          fp.value = -value;
          fp.bound = matched = true;
        }
      }
    }
    if (!matched) throw std::invalid_argument("binding '" + name + "' names no free parameter");
  }
  if (policy == BindingPolicy::RequireAll) {
    for (const auto& fp : sol.free) {
      if (!fp.bound) {
        throw UnboundParameter("free parameter " + fp.name + " = alpha(" +
                               std::to_string(fp.pair.first) + "," +
                               std::to_string(fp.pair.second) + ") is unbound");
      }
    }
  }

  Eigen::VectorXd x = sol.particular;
  for (std::size_t f = 0; f < sol.free.size(); ++f) x += sol.free[f].value * sol.directions[f];

  AlphaTable table(system.r);
  for (std::size_t u = 0; u < system.unknowns.size(); ++u) {
    table.set(system.unknowns[u].first, system.unknowns[u].second, x(u));
  }
  for (const auto& [i, j] : system.forced_zero) table.set(i, j, 0.0);
  table.free_parameters() = sol.free;
  return table;
}

double system_residual(const AlphaSystem& system, const AlphaTable& alpha) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(system.unknowns.size()));
  for (std::size_t u = 0; u < system.unknowns.size(); ++u) {
    x(u) = alpha(system.unknowns[u].first, system.unknowns[u].second);
  }
  if (system.rhs.size() == 0) return 0.0;
  return (system.matrix * x - system.rhs).cwiseAbs().maxCoeff();
}

double SymplecticBlueprint::eval_a_hat(double tau, double sigma) const {
  const int r = alpha.r();
  const auto pt = family.eval_all(r, tau);
  const auto ps = family.eval_all(r, sigma);
  double sum = 0.5;
  for (const auto& [pair, value] : alpha.upper()) {
    const auto [i, j] = pair;
    sum += value * (pt[i] * ps[j] - pt[j] * ps[i]);
  }
  return b_hat(sigma) * sum;
}

double SymplecticBlueprint::eval_B(double tau) const { return b_hat(tau) * family.weight(tau); }

double SymplecticBlueprint::eval_A(double tau, double sigma) const {
  return eval_a_hat(tau, sigma) * family.weight(sigma);
}

int SymplecticBlueprint::a_hat_degree_tau() const {
  int degree = 0;
  for (const auto& [pair, value] : alpha.upper()) {
    if (std::abs(value) > 1e-14) degree = std::max(degree, pair.second);
  }
  return degree;
}

int SymplecticBlueprint::a_hat_degree_sigma() const {
  return std::max(b_hat_degree(), 0) + a_hat_degree_tau();
}

SymplecticBlueprint make_blueprint(const PolynomialFamily& family, int xi, int eta, int rho,
                                   const std::map<std::string, double>& bindings,
                                   BindingPolicy policy,
                                   const std::vector<AlphaPair>& zero_pairs) {
  const AlphaSystem system = assemble_system(family, xi, eta, rho, zero_pairs);
  return SymplecticBlueprint{family,
                             xi,
                             eta,
                             rho,
                             solve_alpha(system, bindings, policy),
                             build_b_hat(family, xi),
                             continuous_order_bound(xi, eta)};
}

int continuous_order_bound(int xi, int eta) {
  const int zeta = std::min(xi, eta);
  return std::min({xi, 2 * eta + 2, eta + zeta + 1});
}

int predicted_order(const SymplecticBlueprint& blueprint, bool symmetric) {
  const int raw = continuous_order_bound(blueprint.xi, blueprint.eta);
  return symmetric && raw % 2 == 1 ? raw + 1 : raw;
}

ContinuityReport check_continuous(const SymplecticBlueprint& bp, double tol) {
  const PolynomialFamily& fam = bp.family;
  const int zeta = std::min(bp.xi, bp.eta);
  const int n_nodes = std::max(8, 2 * bp.xi + bp.alpha.r() + 2);
  const QuadratureRule rule = gauss_christoffel_rule(fam, n_nodes);

  constexpr int kSamples = 17;
  std::vector<double> samples;
  for (int l = 0; l < kSamples; ++l) samples.push_back(static_cast<double>(l) / (kSamples - 1));

  ContinuityReport report;

  std::vector<double> b_res;
  for (int k = 0; k < bp.xi; ++k) {
    const double lhs = rule.integrate([&](double t) { return bp.b_hat(t) * fam.eval(k, t); });
    b_res.push_back(std::abs(lhs - fam.moment(k)));
  }

  std::vector<double> c_res;
  for (int k = 0; k < bp.eta; ++k) {
    const BasisPoly target = running_integral(fam, k);
    double worst = 0.0;
    for (double tau : samples) {
      const double lhs =
          rule.integrate([&](double s) { return bp.eval_a_hat(tau, s) * fam.eval(k, s); });
      worst = std::max(worst, std::abs(lhs - target(tau)));
    }
    c_res.push_back(worst);
  }

  std::vector<double> d_res;
  for (int k = 0; k < zeta; ++k) {
    const BasisPoly partial = running_integral(fam, k);
    double worst = 0.0;
    for (double sigma : samples) {
      const double lhs = rule.integrate(
          [&](double t) { return bp.b_hat(t) * bp.eval_a_hat(t, sigma) * fam.eval(k, t); });
      const double rhs = bp.b_hat(sigma) * (fam.moment(k) - partial(sigma));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    d_res.push_back(worst);
  }

  auto max_of = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  };
  report.b_order = verified_order(b_res, tol);
  report.c_order = verified_order(c_res, tol);
  report.d_order = verified_order(d_res, tol);
  report.b_residual = max_of(b_res);
  report.c_residual = max_of(c_res);
  report.d_residual = max_of(d_res);
  report.symplectic_residual = symplectic_residual(fam, bp.b_hat, bp.alpha.dense());
  return report;
}

double symplectic_residual(const PolynomialFamily& family, const BasisPoly& b_hat,
                           const Eigen::MatrixXd& alpha) {
  const int top = static_cast<int>(alpha.rows()) - 1;
  const int degree = 2 * std::max(b_hat.degree(), 0) + std::max(top, 0);
  const QuadratureRule rule = gauss_christoffel_rule(family, degree + 1);
  const auto n = static_cast<Eigen::Index>(rule.size());

  Eigen::MatrixXd basis(n, degree + 1);  // P_i(c_a)
  Eigen::MatrixXd small(n, std::max(top, 0) + 1);
  Eigen::VectorXd bh(n), w(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto values = family.eval_all(degree, rule.nodes[a]);
    for (int i = 0; i <= degree; ++i) basis(a, i) = values[i];
    for (int i = 0; i <= top; ++i) small(a, i) = values[i];
    bh(a) = b_hat(rule.nodes[a]);
    w(a) = rule.weights[a];
  }

  // S(t,s) = sum alpha_ij P_i(t) P_j(s) on the node grid.
  const Eigen::MatrixXd s_grid = small * alpha * small.transpose();
  Eigen::MatrixXd f(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double a_ts = bh(b) * (0.5 + s_grid(a, b));
      const double a_st = bh(a) * (0.5 + s_grid(b, a));
      f(a, b) = bh(a) * a_ts + bh(b) * a_st - bh(a) * bh(b);
    }
  }
  const Eigen::MatrixXd wb = w.asDiagonal() * basis;
  const Eigen::MatrixXd coeffs = wb.transpose() * f * wb;
  return coeffs.cwiseAbs().maxCoeff();
}

}  // namespace chebsym
