#pragma once

#include "monoclass/class_code.hpp"
#include "monoclass/operators.hpp"
#include "monoclass/relations.hpp"

namespace monoclass {

/// Product operator (A × B)(x_a, x_b) = (A x_a, B x_b): the block-diagonal
/// matrix diag(A, B).
MatrixOperator product_op(const MatrixOperator& a, const MatrixOperator& b);

/// Product of relations on R^{d_a + d_b}; coordinates are the d_a components
/// of the first factor followed by the d_b of the second, in both the x-part
/// and the image part.
LinearRelation product_relation(const LinearRelation& a, const LinearRelation& b,
                                const Tolerance& tol = {});

/// Componentwise AND of the five class flags; membership of a product
/// operator is the AND of its factors' memberships.
ClassCode class_and(const ClassCode& c1, const ClassCode& c2);

}  // namespace monoclass
