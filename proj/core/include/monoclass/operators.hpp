#pragma once

#include <optional>

#include "monoclass/class_code.hpp"
#include "monoclass/matrix.hpp"
#include "monoclass/numerics.hpp"
#include "monoclass/tolerance.hpp"

namespace monoclass {

/// Single-valued linear operator with full domain, i.e. a square matrix.
class MatrixOperator {
 public:
  explicit MatrixOperator(Matrix m);

  int dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  bool is_zero() const { return m_.max_abs() == 0.0; }

 private:
  Matrix m_;
};

/// A₊ = (A + Aᵀ)/2; carries the quadratic form <x, Ax>.
Matrix symmetric_part(const MatrixOperator& a);

bool is_monotone(const MatrixOperator& a, const Tolerance& tol = {});

/// Monotone with trivial kernel of A₊ (so <x, Ax> = 0 only at x = 0).
bool is_strictly_monotone(const MatrixOperator& a, const Tolerance& tol = {});

/// Monotone with ker(A₊) ⊆ ker(A).
bool is_paramonotone(const MatrixOperator& a, const Tolerance& tol = {});

/// sup{alpha >= 0 : A₊ − alpha·AᵀA is PSD}, by doubling then bisection.
/// Requires a monotone operator; unbounded exactly for the zero operator.
AlphaStar brezis_haraux_alpha(const MatrixOperator& a, const Tolerance& tol = {});

/// Monotone with a positive lower bound <x, Ax> >= alpha‖Ax‖².  Decided via
/// brezis_haraux_alpha; agrees with is_paramonotone on every matrix (a
/// finite-dimensional equivalence the property suite re-checks).
bool is_3star(const MatrixOperator& a, const Tolerance& tol = {});

/// alpha* values below this floor count as zero.  Separates the tolerance
/// artifact of non-3* inputs (≈ eig_rel) from genuinely positive bounds.
inline double alpha_positive_floor(const Tolerance& tol) { return 1e3 * tol.eig_rel; }

/// Symmetrized block form whose quadratic form at a stacked cycle
/// (x_1..x_n) equals the cycle sum Σ <x_i − x_{i+1}, Ax_i>.
Matrix cyclic_gram(const MatrixOperator& a, int n);

struct CyclicResult {
  bool cyclic = false;
  std::optional<CycleWitness> witness;  // cycle with negative sum when not cyclic

  explicit operator bool() const { return cyclic; }
};

/// n-cyclic monotonicity as PSD-ness of the cyclic gram form.
CyclicResult is_n_cyclic(const MatrixOperator& a, int n, const Tolerance& tol = {});

/// Necessary condition max{|b|, |c|} <= a + d for a 3-cyclic monotone
/// 2x2 operator [[a, c],[b, d]].
bool necessary_3cm_2x2(const MatrixOperator& a);

/// Monotone linear operators with full domain are maximal monotone.
bool is_maximal(const MatrixOperator& a, const Tolerance& tol = {});

/// Direct evaluation of the cycle sum Σ <x_i − x_{i+1}, x_i*> with
/// x_i* = A x_i and x_{n+1} = x_1.
double cycle_sum(const MatrixOperator& a, const std::vector<Vec>& points);

ClassificationReport classify(const MatrixOperator& a, const Tolerance& tol = {});

}  // namespace monoclass
