#pragma once

#include <string>
#include <variant>
#include <vector>

#include "monoclass/class_code.hpp"
#include "monoclass/operators.hpp"
#include "monoclass/relations.hpp"

namespace monoclass {

/// Named example with its expected class code, powering table reproduction
/// and golden tests.
struct CatalogEntry {
  std::string name;
  std::variant<MatrixOperator, LinearRelation> object;
  ClassCode expected_code;
  std::string provenance;

  bool is_operator() const { return std::holds_alternative<MatrixOperator>(object); }
  const MatrixOperator& op() const { return std::get<MatrixOperator>(object); }
  const LinearRelation& relation() const { return std::get<LinearRelation>(object); }
};

/// Rotation of R² by theta radians.
MatrixOperator rotation(double theta);

/// The fixed operator [[1, −2],[3, 1]]: strictly monotone yet not 3-cyclic.
MatrixOperator tilde_r();

/// (x_1..x_d) ↦ (x_1..x_k, 0..0).  k = d gives the identity, k = 0 zero.
MatrixOperator coordinate_projection(int d, int k);

/// The 3×3 operator with rows (1,−2,1), (3,1,3), (1,−2,1): paramonotone and
/// 3*-monotone but neither strictly nor 3-cyclic monotone.
MatrixOperator example_3x3();

/// Symmetric rank-one-deficient family [[a, b],[b, b²/a]], a > 0: the
/// paramonotone non-strict 2×2 operators up to the zero operator.
MatrixOperator symmetric_pm_family(double a, double b);

/// Block diagonal of rotations R_{theta_k}, theta_k = pi/2 − 1/k⁴, k = 1..N.
/// alpha* = sin(1/N⁴) decays to zero, so no member of the family keeps a
/// uniform 3* bound.
MatrixOperator rotation_chain(int n_blocks);

/// Closed form sin(1/N⁴) for alpha*(rotation_chain(N)).
double rotation_chain_alpha(int n_blocks);

/// Operator examples with expected codes (≥ 8 entries).
std::vector<CatalogEntry> operator_catalog(const Tolerance& tol = {});

/// Relation examples: a maximal 2-d relation, the 3*-but-not-paramonotone
/// relation in R³, its domain-perp extension, and a non-maximal line.
std::vector<CatalogEntry> relation_catalog(const Tolerance& tol = {});

LinearRelation max_r2_relation(const Tolerance& tol = {});
LinearRelation star_not_pm_relation(const Tolerance& tol = {});
LinearRelation non_max_relation(const Tolerance& tol = {});

}  // namespace monoclass
