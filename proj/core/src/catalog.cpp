#include "monoclass/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monoclass {

MatrixOperator rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return MatrixOperator(Matrix(2, 2, {c, -s, s, c}));
}

MatrixOperator tilde_r() { return MatrixOperator(Matrix(2, 2, {1, -2, 3, 1})); }

MatrixOperator coordinate_projection(int d, int k) {
  if (d < 1 || k < 0 || k > d)
    throw std::invalid_argument("coordinate_projection: need 0 <= k <= d, d >= 1");
  Matrix m(d, d);
  for (int i = 0; i < k; ++i) m(i, i) = 1.0;
  return MatrixOperator(std::move(m));
}

MatrixOperator example_3x3() {
  return MatrixOperator(Matrix(3, 3, {1, -2, 1, 3, 1, 3, 1, -2, 1}));
}

MatrixOperator symmetric_pm_family(double a, double b) {
  if (a <= 0) throw std::invalid_argument("symmetric_pm_family: a must be positive");
  return MatrixOperator(Matrix(2, 2, {a, b, b, b * b / a}));
}

MatrixOperator rotation_chain(int n_blocks) {
  if (n_blocks < 1) throw std::invalid_argument("rotation_chain: need at least one block");
  Matrix m(2 * n_blocks, 2 * n_blocks);
  for (int k = 1; k <= n_blocks; ++k) {
    const double theta = std::numbers::pi / 2 - 1.0 / (static_cast<double>(k) * k * k * k);
    m.add_block(2 * (k - 1), 2 * (k - 1), rotation(theta).matrix());
  }
  return MatrixOperator(std::move(m));
}

double rotation_chain_alpha(int n_blocks) {
  if (n_blocks < 1) throw std::invalid_argument("rotation_chain_alpha: need at least one block");
  const double n = n_blocks;
  return std::sin(1.0 / (n * n * n * n));
}

std::vector<CatalogEntry> operator_catalog(const Tolerance& tol) {
  (void)tol;
  const double pi = std::numbers::pi;
  std::vector<CatalogEntry> entries;
  auto put = [&entries](std::string name, MatrixOperator op, const char* code,
                        std::string provenance) {
    entries.push_back({std::move(name), std::move(op), ClassCode::parse(code),
                       std::move(provenance)});
  };
  put("identity", coordinate_projection(2, 2), "11111", "identity on R^2");
  put("zero", coordinate_projection(2, 0), "10111", "zero operator on R^2");
  put("rotation_half_pi", rotation(pi / 2), "00010", "rotation by pi/2");
  put("rotation_1.3", rotation(1.3), "11011", "rotation by 1.3 rad, between pi/3 and pi/2");
  put("rotation_quarter_pi", rotation(pi / 4), "11111", "rotation by pi/4, below pi/3");
  put("tilde_r", tilde_r(), "11011", "[[1,-2],[3,1]], strictly monotone, fails the 3-cyclic bound");
  put("projection", coordinate_projection(2, 1), "10111", "(x1, x2) -> (x1, 0)");
  put("example_3x3", example_3x3(), "10011",
      "3x3 with ker A+ = span{(-1,0,1)} = ker A; paramonotone, not 3-cyclic");
  put("symmetric_rank1", symmetric_pm_family(1, 1), "10111",
      "[[1,1],[1,1]], symmetric PSD of rank 1");
  put("rotation_chain_1", rotation_chain(1), "11111",
      "single block R_{pi/2 - 1}; angle below pi/3");
  put("rotation_chain_3", rotation_chain(3), "11011",
      "blocks R_{pi/2 - 1/k^4}, k = 1..3; second block exceeds pi/3");
  return entries;
}

LinearRelation max_r2_relation(const Tolerance& tol) {
  return LinearRelation::from_graph_vectors(2, {{1, 0, 1, 0}, {0, 0, 0, 1}}, tol);
}

LinearRelation star_not_pm_relation(const Tolerance& tol) {
  return LinearRelation::from_graph_vectors(3, {{1, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}, tol);
}

LinearRelation non_max_relation(const Tolerance& tol) {
  return LinearRelation::from_graph_vectors(2, {{1, 0, 1, 0}}, tol);
}

std::vector<CatalogEntry> relation_catalog(const Tolerance& tol) {
  std::vector<CatalogEntry> entries;
  auto put = [&entries](std::string name, LinearRelation rel, const char* code,
                        std::string provenance) {
    entries.push_back({std::move(name), std::move(rel), ClassCode::parse(code),
                       std::move(provenance)});
  };
  put("max_r2", max_r2_relation(tol), "11111",
      "graph span{(1,0,1,0),(0,0,0,1)}: x1 -> x1 with A0 = span{e2}; maximal");
  put("star_not_pm", star_not_pm_relation(tol), "00101",
      "graph span{(e1;e2),(0;e3)} in R^3: 3*-monotone, not paramonotone, not maximal");
  put("star_not_pm_extended", extend_by_domain_perp(star_not_pm_relation(tol), tol), "10111",
      "domain-perp extension of star_not_pm: paramonotone and maximal");
  put("non_max", non_max_relation(tol), "11101",
      "line span{(1,0,1,0)} in R^2: monotone, graph dimension 1 < 2");
  put("identity_graph", LinearRelation::from_operator(coordinate_projection(2, 2), tol), "11111",
      "graph of the identity on R^2");
  return entries;
}

}  // namespace monoclass
