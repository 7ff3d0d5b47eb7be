#include "chebsym/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace chebsym {

namespace {

using nlohmann::json;

constexpr const char* kBlueprintFormat = "chebsym-blueprint";
constexpr const char* kTableauFormat = "chebsym-tableau";

std::string quoted(const std::string& s) { return json(s).dump(); }

template <class Range>
std::string real_array(const Range& values) {
  std::string out = "[";
  bool first = true;
  for (double v : values) {
    if (!first) out += ", ";
    out += format_real(v);
    first = false;
  }
  return out + "]";
}

std::string real_array(const Eigen::VectorXd& v) {
  return real_array(std::vector<double>(v.data(), v.data() + v.size()));
}

void check_header(const json& doc, const char* format) {
  if (!doc.is_object() || doc.value("format", "") != format) {
    throw FormatError(std::string("expected a ") + format + " document");
  }
  if (doc.at("version").get<int>() != kFormatVersion) {
    throw FormatError("unsupported " + std::string(format) + " version " +
                      doc.at("version").dump());
  }
}

json parse(std::istream& is) {
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return is;
}

}  // namespace

std::string format_real(double value) {
  if (!std::isfinite(value)) throw FormatError("non-finite value cannot be written");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_blueprint(std::ostream& os, const SymplecticBlueprint& bp) {
  os << "{\n";
  os << "  \"format\": " << quoted(kBlueprintFormat) << ",\n";
  os << "  \"version\": " << kFormatVersion << ",\n";
  os << "  \"family\": " << quoted(std::string(to_string(bp.family.kind()))) << ",\n";
  os << "  \"max_degree\": " << bp.family.max_degree() << ",\n";
  os << "  \"xi\": " << bp.xi << ",\n";
  os << "  \"eta\": " << bp.eta << ",\n";
  os << "  \"rho\": " << bp.rho << ",\n";
  os << "  \"r\": " << bp.alpha.r() << ",\n";
  os << "  \"alpha\": [";
  bool first = true;
  for (const auto& [pair, value] : bp.alpha.upper()) {
    os << (first ? "\n" : ",\n") << "    [" << pair.first << ", " << pair.second << ", "
       << format_real(value) << "]";
    first = false;
  }
  os << (first ? "],\n" : "\n  ],\n");
  os << "  \"free_parameters\": [";
  first = true;
  for (const auto& fp : bp.alpha.free_parameters()) {
    os << (first ? "\n" : ",\n") << "    {\"name\": " << quoted(fp.name)
       << ", \"i\": " << fp.pair.first << ", \"j\": " << fp.pair.second
       << ", \"value\": " << format_real(fp.value)
       << ", \"bound\": " << (fp.bound ? "true" : "false") << "}";
    first = false;
  }
  os << (first ? "],\n" : "\n  ],\n");
  os << "  \"b_hat\": " << real_array(bp.b_hat.coeffs) << ",\n";
  os << "  \"predicted_order\": " << bp.predicted_order << "\n";
  os << "}\n";
}

SymplecticBlueprint read_blueprint(std::istream& is) {
  const json doc = parse(is);
  try {
    check_header(doc, kBlueprintFormat);
    const PolynomialFamily family(parse_family_kind(doc.at("family").get<std::string>()),
                                  doc.at("max_degree").get<int>());
    AlphaTable alpha(doc.at("r").get<int>());
    for (const auto& entry : doc.at("alpha")) {
      alpha.set(entry.at(0).get<int>(), entry.at(1).get<int>(), entry.at(2).get<double>());
    }
    for (const auto& fp : doc.at("free_parameters")) {
      alpha.free_parameters().push_back({fp.at("name").get<std::string>(),
                                         {fp.at("i").get<int>(), fp.at("j").get<int>()},
                                         fp.at("value").get<double>(),
                                         fp.at("bound").get<bool>()});
    }
    return SymplecticBlueprint{family,
                               doc.at("xi").get<int>(),
                               doc.at("eta").get<int>(),
                               doc.at("rho").get<int>(),
                               std::move(alpha),
                               BasisPoly(family, doc.at("b_hat").get<std::vector<double>>()),
                               doc.at("predicted_order").get<int>()};
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid blueprint: ") + e.what());
  } catch (const std::logic_error& e) {
    throw FormatError(std::string("invalid blueprint: ") + e.what());
  }
}

void write_tableau(std::ostream& os, const ButcherTableau& t) {
  os << "{\n";
  os << "  \"format\": " << quoted(kTableauFormat) << ",\n";
  os << "  \"version\": " << kFormatVersion << ",\n";
  os << "  \"s\": " << t.stages() << ",\n";
  os << "  \"A\": [";
  for (Eigen::Index i = 0; i < t.A.rows(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << "    " << real_array(Eigen::VectorXd(t.A.row(i).transpose()));
  }
  os << "\n  ],\n";
  os << "  \"b\": " << real_array(t.b) << ",\n";
  os << "  \"c\": " << real_array(t.c) << ",\n";
  os << "  \"claimed_order\": " << t.claimed_order << ",\n";
  os << "  \"provenance\": " << quoted(t.provenance) << "\n";
  os << "}\n";
}

ButcherTableau read_tableau(std::istream& is) {
  const json doc = parse(is);
  try {
    check_header(doc, kTableauFormat);
    const auto s = doc.at("s").get<Eigen::Index>();
    if (s < 1) throw FormatError("tableau needs at least one stage");
    const auto rows = doc.at("A").get<std::vector<std::vector<double>>>();
    const auto b = doc.at("b").get<std::vector<double>>();
    const auto c = doc.at("c").get<std::vector<double>>();
    if (static_cast<Eigen::Index>(rows.size()) != s || static_cast<Eigen::Index>(b.size()) != s ||
        static_cast<Eigen::Index>(c.size()) != s) {
      throw FormatError("tableau arrays disagree with s");
    }
    ButcherTableau t{Eigen::MatrixXd(s, s), Eigen::VectorXd(s), Eigen::VectorXd(s),
                     doc.at("claimed_order").get<int>(), doc.value("provenance", "")};
    for (Eigen::Index i = 0; i < s; ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != s) throw FormatError("ragged A matrix");
      for (Eigen::Index j = 0; j < s; ++j) t.A(i, j) = rows[i][j];
      t.b(i) = b[i];
      t.c(i) = c[i];
    }
    return t;
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid tableau: ") + e.what());
  }
}

void save_blueprint(const std::filesystem::path& path, const SymplecticBlueprint& bp) {
  auto os = open_out(path);
  write_blueprint(os, bp);
}

SymplecticBlueprint load_blueprint(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_blueprint(is);
}

void save_tableau(const std::filesystem::path& path, const ButcherTableau& t) {
  auto os = open_out(path);
  write_tableau(os, t);
}

ButcherTableau load_tableau(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_tableau(is);
}

void write_tableau_csv(std::ostream& os, const ButcherTableau& t) {
  const auto s = static_cast<Eigen::Index>(t.stages());
  os << "c";
  for (Eigen::Index j = 0; j < s; ++j) os << ",a" << j + 1;
  os << "\n";
  for (Eigen::Index i = 0; i < s; ++i) {
    os << format_real(t.c(i));
    for (Eigen::Index j = 0; j < s; ++j) os << "," << format_real(t.A(i, j));
    os << "\n";
  }
  os << "b";
  for (Eigen::Index j = 0; j < s; ++j) os << "," << format_real(t.b(j));
  os << "\n";
}

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& rec) {
  const Eigen::Index d = rec.states.empty() ? 0 : rec.states.front().size();
  const bool energy = !rec.energy_error.empty();
  const bool solution = !rec.solution_error.empty();
  os << "t";
  for (Eigen::Index k = 0; k < d; ++k) os << ",z" << k + 1;
  if (energy) os << ",energy_err";
  if (solution) os << ",sol_err";
  os << ",iters\n";
  for (std::size_t n = 0; n < rec.states.size(); ++n) {
    os << format_real(rec.times[n]);
    for (Eigen::Index k = 0; k < d; ++k) os << "," << format_real(rec.states[n](k));
    if (energy) os << "," << format_real(rec.energy_error[n]);
    if (solution) os << "," << format_real(rec.solution_error[n]);
    os << "," << rec.iterations[n] << "\n";
  }
}

void write_summary_csv(std::ostream& os, const std::vector<BenchmarkReport>& reports) {
  os << "method,h,T,max_energy_err_w1,max_energy_err_w2,sol_err_T/2,sol_err_T,slope\n";
  for (const auto& r : reports) {
    os << r.method << "," << format_real(r.h) << "," << format_real(r.T) << ","
       << format_real(r.max_energy_err_w1) << "," << format_real(r.max_energy_err_w2) << ","
       << format_real(r.sol_err_half) << "," << format_real(r.sol_err_T) << ","
       << (std::isnan(r.slope) ? std::string("nan") : format_real(r.slope)) << "\n";
  }
}

void write_long_csv(std::ostream& os, const std::vector<BenchmarkRun>& runs) {
  os << "method,t,energy_err,sol_err\n";
  for (const auto& run : runs) {
    const auto& rec = run.record;
    for (std::size_t n = 0; n < rec.times.size(); ++n) {
      os << run.report.method << "," << format_real(rec.times[n]) << ","
         << (rec.energy_error.empty() ? std::string("nan") : format_real(rec.energy_error[n]))
         << ","
         << (rec.solution_error.empty() ? std::string("nan") : format_real(rec.solution_error[n]))
         << "\n";
    }
  }
}

void write_gnuplot_script(std::ostream& os, const std::string& long_csv_name,
                          const std::vector<BenchmarkRun>& runs) {
  os << "set datafile separator ','\n";
  os << "set key autotitle columnhead\n";
  os << "set logscale y\n";
  os << "set xlabel 't'\n";
  for (const auto& [column, label, file] :
       {std::tuple{3, "energy error", "energy_error.png"},
        std::tuple{4, "solution error", "solution_error.png"}}) {
    os << "set terminal pngcairo size 900,600\n";
    os << "set output '" << file << "'\n";
    os << "set ylabel '" << label << "'\n";
    os << "plot ";
    for (std::size_t m = 0; m < runs.size(); ++m) {
      const std::string& name = runs[m].report.method;
      os << (m ? ", \\\n     " : "") << "'" << long_csv_name << "' using "
         << "(strcol(1) eq '" << name << "' ? $2 : NaN):" << column << " with lines title '"
         << name << "'";
    }
    os << "\n";
  }
}

}  // namespace chebsym
