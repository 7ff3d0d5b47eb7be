#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebsym/bench.hpp"
#include "chebsym/construct.hpp"
#include "chebsym/tableau.hpp"

namespace chebsym {

// Malformed or unsupported blueprint/tableau document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

// 17 significant digits, round-trip safe.
std::string format_real(double value);

// JSON documents with stable field order:
//   blueprint: format, version, family, max_degree, xi, eta, rho, r,
//              alpha [[i, j, value], ...] (i < j), free_parameters, b_hat,
//              predicted_order
//   tableau:   format, version, s, A (row-major), b, c, claimed_order, provenance
void write_blueprint(std::ostream& os, const SymplecticBlueprint& blueprint);
SymplecticBlueprint read_blueprint(std::istream& is);
void write_tableau(std::ostream& os, const ButcherTableau& tableau);
ButcherTableau read_tableau(std::istream& is);

void save_blueprint(const std::filesystem::path& path, const SymplecticBlueprint& blueprint);
SymplecticBlueprint load_blueprint(const std::filesystem::path& path);
void save_tableau(const std::filesystem::path& path, const ButcherTableau& tableau);
ButcherTableau load_tableau(const std::filesystem::path& path);

// Header "c,a1..as"; one row per stage, then a row starting with "b".
void write_tableau_csv(std::ostream& os, const ButcherTableau& tableau);

// Header "t,z1..zd[,energy_err][,sol_err],iters".
void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& record);

// Header "method,h,T,max_energy_err_w1,max_energy_err_w2,sol_err_T/2,sol_err_T,slope".
void write_summary_csv(std::ostream& os, const std::vector<BenchmarkReport>& reports);

// Long format "method,t,energy_err,sol_err", one row per method and step.
void write_long_csv(std::ostream& os, const std::vector<BenchmarkRun>& runs);

// Plain gnuplot commands plotting the long-format CSV on log axes.
void write_gnuplot_script(std::ostream& os, const std::string& long_csv_name,
                          const std::vector<BenchmarkRun>& runs);

}  // namespace chebsym
