#include <sstream>

#include "chebsym/io.hpp"
#include "doctest.h"

using namespace chebsym;

namespace {

const PolynomialFamily cheb1(FamilyKind::ChebyshevFirst);
const PolynomialFamily cheb2(FamilyKind::ChebyshevSecond);

std::string header(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("real formatting") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_real(1.0 / 3)) == 1.0 / 3);
  CHECK_THROWS_AS(format_real(std::nan("")), FormatError);
}

TEST_CASE("blueprint round trip is exact") {
  const auto bp = make_blueprint(cheb2, 3, 1, 2, {{"mu1", 0.1}});
  std::stringstream ss;
  write_blueprint(ss, bp);
  const std::string text = ss.str();
  const auto back = read_blueprint(ss);
  CHECK(back.family == bp.family);
  CHECK(back.xi == 3);
  CHECK(back.eta == 1);
  CHECK(back.rho == 2);
  CHECK(back.predicted_order == bp.predicted_order);
  CHECK(back.alpha.upper() == bp.alpha.upper());
  CHECK(back.b_hat.coeffs == bp.b_hat.coeffs);
  REQUIRE(back.alpha.free_parameters().size() == 1);
  CHECK(back.alpha.free_parameters()[0].name == "mu1");
  CHECK(back.alpha.free_parameters()[0].bound);
  std::stringstream again;
  write_blueprint(again, back);
  CHECK(again.str() == text);

  const auto t1 = discretize(bp, chebyshev2_rule(3));
  const auto t2 = discretize(back, chebyshev2_rule(3));
  CHECK(t1.A == t2.A);
  CHECK(t1.b == t2.b);
  CHECK(t1.c == t2.c);
}

TEST_CASE("tableau round trip is exact") {
  const auto t = discretize(make_blueprint(cheb1, 5, 2, 2), chebyshev1_rule(5));
  std::stringstream ss;
  write_tableau(ss, t);
  const std::string text = ss.str();
  const auto back = read_tableau(ss);
  CHECK(back.A == t.A);
  CHECK(back.b == t.b);
  CHECK(back.c == t.c);
  CHECK(back.claimed_order == t.claimed_order);
  CHECK(back.provenance == t.provenance);
  std::stringstream again;
  write_tableau(again, back);
  CHECK(again.str() == text);
}

TEST_CASE("malformed documents") {
  std::stringstream garbage("{not json");
  CHECK_THROWS_AS(read_tableau(garbage), FormatError);
  std::stringstream wrong(R"({"format": "chebsym-blueprint", "version": 1})");
  CHECK_THROWS_AS(read_tableau(wrong), FormatError);
  std::stringstream version(R"({"format": "chebsym-tableau", "version": 9})");
  CHECK_THROWS_AS(read_tableau(version), FormatError);
  std::stringstream ragged(
      R"({"format": "chebsym-tableau", "version": 1, "s": 2, "A": [[1, 2], [3]],)"
      R"( "b": [1, 0], "c": [0, 1], "claimed_order": 1})");
  CHECK_THROWS_AS(read_tableau(ragged), FormatError);
  std::stringstream missing(R"({"format": "chebsym-blueprint", "version": 1, "family": "x"})");
  CHECK_THROWS_AS(read_blueprint(missing), FormatError);
}

TEST_CASE("csv schemas") {
  std::stringstream tab;
  write_tableau_csv(tab, fixtures::gauss2());
  CHECK(header(tab.str()) == "c,a1,a2");
  CHECK(tab.str().find("\nb,0.5,0.5\n") != std::string::npos);

  const auto p = kepler(0.1);
  IntegrationConfig c;
  c.h = 0.1;
  c.n_steps = 4;
  const auto rec = integrate(fixtures::midpoint(), p, 0.0, p.initial, c);
  std::stringstream traj;
  write_trajectory_csv(traj, rec);
  CHECK(header(traj.str()) == "t,z1,z2,z3,z4,energy_err,sol_err,iters");

  const auto run = run_benchmark("midpoint", fixtures::midpoint(), p, 0.1, 1.0);
  std::stringstream summary;
  write_summary_csv(summary, {run.report});
  CHECK(header(summary.str()) ==
        "method,h,T,max_energy_err_w1,max_energy_err_w2,sol_err_T/2,sol_err_T,slope");
  std::stringstream longf;
  write_long_csv(longf, {run});
  CHECK(header(longf.str()) == "method,t,energy_err,sol_err");
  std::stringstream gp;
  write_gnuplot_script(gp, "errors_long.csv", {run});
  CHECK(gp.str().find("errors_long.csv") != std::string::npos);
}
