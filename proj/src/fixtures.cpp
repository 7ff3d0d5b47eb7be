#include <cmath>
#include <stdexcept>

#include "chebsym/tableau.hpp"

namespace chebsym::fixtures {

namespace {

ButcherTableau make(std::initializer_list<std::initializer_list<double>> a,
                    std::initializer_list<double> b, std::initializer_list<double> c, int order,
                    std::string provenance) {
  const auto s = static_cast<Eigen::Index>(b.size());
  ButcherTableau t{Eigen::MatrixXd(s, s), Eigen::VectorXd(s), Eigen::VectorXd(s), order,
                   std::move(provenance)};
  Eigen::Index i = 0;
  for (const auto& row : a) {
    if (static_cast<Eigen::Index>(row.size()) != s) throw std::logic_error("ragged fixture");
    Eigen::Index j = 0;
    for (double v : row) t.A(i, j++) = v;
    ++i;
  }
  i = 0;
  for (double v : b) t.b(i++) = v;
  i = 0;
  for (double v : c) t.c(i++) = v;
  return canonicalize(std::move(t));
}

}  // namespace

ButcherTableau table1(double g) {
  const double r3 = std::sqrt(3.0);
  return make({{1.0 / 9, (10 - 5 * r3) / 36 + 5 * g, (1 - r3) / 9 - 5 * g},
               {(2 + r3) / 18 - 2 * g, 5.0 / 18, (2 - r3) / 18 + 2 * g},
               {(1 + r3) / 9 + 5 * g, (10 + 5 * r3) / 36 - 5 * g, 1.0 / 9}},
              {2.0 / 9, 5.0 / 9, 2.0 / 9}, {(2 - r3) / 4, 0.5, (2 + r3) / 4}, 4,
              "fixture table1");
}

// Printed with descending abscissae and 14 decimals; canonicalized on load.
ButcherTableau table2() {
  return make(
      {{0.04194530711667, 0.24300466547350, 0.37207633208122, 0.26512850280807, 0.05337345066811},
       {0.00631196709497, 0.13138802621666, 0.28852394136060, 0.28302706319253, 0.08464162828148},
       {-0.01789322937530, 0.01554611000971, 0.15333333333333, 0.24722994242362,
        0.10178384360864},
       {-0.00075101404814, -0.02025101075920, 0.01814272530606, 0.13138802621666,
        0.07757864713837},
       {0.03051716356523, -0.00235245037475, -0.06540966541455, 0.01977138695982,
        0.04194530711667}},
      {0.08389061423334, 0.26277605243332, 0.30666666666667, 0.26277605243332, 0.08389061423334},
      {0.97552825814758, 0.79389262614624, 0.50000000000000, 0.20610737385376, 0.02447174185242},
      6, "fixture table2");
}

ButcherTableau table3(double g) {
  const double r2 = std::sqrt(2.0);
  return make({{1.0 / 6, (2 - r2) / 12 + g, (1 - r2) / 6 - g},
               {(2 + r2) / 12 - g, 1.0 / 6, (2 - r2) / 12 + g},
               {(1 + r2) / 6 + g, (2 + r2) / 12 - g, 1.0 / 6}},
              {1.0 / 3, 1.0 / 3, 1.0 / 3}, {(2 - r2) / 4, 0.5, (2 + r2) / 4}, 4,
              "fixture table3");
}

ButcherTableau table4() {
  const double r3 = std::sqrt(3.0);
  return make(
      {{7.0 / 90, (19 - 9 * r3) / 160, (52 - 39 * r3) / 360, (13 - 9 * r3) / 160,
        (56 - 21 * r3) / 720},
       {(91 + 63 * r3) / 1440, 1.0 / 10, 13.0 / 360, -1.0 / 80, (91 - 63 * r3) / 1440},
       {(28 + 21 * r3) / 360, 7.0 / 40, 13.0 / 90, 1.0 / 40, (28 - 21 * r3) / 360},
       {(133 + 63 * r3) / 1440, 17.0 / 80, 91.0 / 360, 1.0 / 10, (133 - 63 * r3) / 1440},
       {(56 + 21 * r3) / 720, (19 + 9 * r3) / 160, (52 + 39 * r3) / 360, (13 + 9 * r3) / 160,
        7.0 / 90}},
      {7.0 / 45, 1.0 / 5, 13.0 / 45, 1.0 / 5, 7.0 / 45},
      {(2 - r3) / 4, 0.25, 0.5, 0.75, (2 + r3) / 4}, 6, "fixture table4");
}

ButcherTableau midpoint() { return make({{0.5}}, {1.0}, {0.5}, 2, "fixture midpoint"); }

ButcherTableau gauss2() {
  const double r3 = std::sqrt(3.0);
  return make({{0.25, 0.25 - r3 / 6}, {0.25 + r3 / 6, 0.25}}, {0.5, 0.5},
              {0.5 - r3 / 6, 0.5 + r3 / 6}, 4, "fixture gauss2");
}

ButcherTableau gauss3() {
  const double r15 = std::sqrt(15.0);
  return make({{5.0 / 36, 2.0 / 9 - r15 / 15, 5.0 / 36 - r15 / 30},
               {5.0 / 36 + r15 / 24, 2.0 / 9, 5.0 / 36 - r15 / 24},
               {5.0 / 36 + r15 / 30, 2.0 / 9 + r15 / 15, 5.0 / 36}},
              {5.0 / 18, 4.0 / 9, 5.0 / 18}, {0.5 - r15 / 10, 0.5, 0.5 + r15 / 10}, 6,
              "fixture gauss3");
}

ButcherTableau explicit_euler() { return make({{0.0}}, {1.0}, {0.0}, 1, "fixture explicit_euler"); }

ButcherTableau rk4() {
  return make({{0, 0, 0, 0}, {0.5, 0, 0, 0}, {0, 0.5, 0, 0}, {0, 0, 1, 0}},
              {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}, {0, 0.5, 0.5, 1}, 4, "fixture rk4");
}

std::vector<std::string> names() {
  return {"table1", "table2", "table3", "table4", "midpoint",
          "gauss2", "gauss3", "explicit_euler", "rk4"};
}

ButcherTableau by_name(const std::string& name, double gamma) {
  if (name == "table1") return table1(gamma);
  if (name == "table2") return table2();
  if (name == "table3") return table3(gamma);
  if (name == "table4") return table4();
  if (name == "midpoint") return midpoint();
  if (name == "gauss2") return gauss2();
  if (name == "gauss3") return gauss3();
  if (name == "explicit_euler") return explicit_euler();
  if (name == "rk4") return rk4();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace chebsym::fixtures
