#pragma once

#include <vector>

#include "monoclass/class_code.hpp"
#include "monoclass/matrix.hpp"
#include "monoclass/numerics.hpp"
#include "monoclass/operators.hpp"
#include "monoclass/subspace.hpp"
#include "monoclass/tolerance.hpp"

namespace monoclass {

/// Set-valued linear operator on R^d whose graph is a subspace of R^{2d}.
///
/// The graph is held as an orthonormal basis whose vectors split into an
/// x-part and an image part; X and Y are the d×k matrices of those parts, so
/// graph points are (Xc, Yc) over coefficient vectors c.  Derived subspaces:
///   dom  = {x : Ax nonempty},   ran = ∪ Ax,
///   a0   = A0 = {y : (0, y) in graph},
///   ker  = {x : 0 in Ax}.
class LinearRelation {
 public:
  static LinearRelation from_graph_vectors(int dim, const std::vector<Vec>& vectors,
                                           const Tolerance& tol = {});
  static LinearRelation from_operator(const MatrixOperator& a, const Tolerance& tol = {});

  int dim() const { return dim_; }
  int graph_dim() const { return graph_.dim(); }
  const Subspace& graph() const { return graph_; }
  const Subspace& dom() const { return dom_; }
  const Subspace& ran() const { return ran_; }
  const Subspace& a0() const { return a0_; }
  const Subspace& ker() const { return ker_; }

  /// x-parts / image parts of the graph basis, as d×k matrices.
  const Matrix& x_part() const { return x_; }
  const Matrix& y_part() const { return y_; }

  /// B = (XᵀY + YᵀX)/2 over graph coefficients; cᵀBc = <y, y*> at the
  /// graph point (y, y*) = (Xc, Yc).
  const Matrix& monotone_form() const { return form_; }

  /// Graph point for a coefficient vector, as x-part and image part.
  std::pair<Vec, Vec> point(const Vec& coeff) const;

 private:
  LinearRelation(int dim, Subspace graph, const Tolerance& tol);

  int dim_;
  Subspace graph_;
  Matrix x_, y_, form_;
  Subspace dom_{1}, ran_{1}, a0_{1}, ker_{1};
};

struct ImageResult {
  Vec representative;  // the unique element of P_{A0⊥} Ax
  Subspace a0;         // Ax = representative + a0
};

/// Ax as the affine set x0* + A0.  Throws std::domain_error when x ∉ dom A.
ImageResult image_of(const LinearRelation& a, const Vec& x, const Tolerance& tol = {});

bool is_monotone_relation(const LinearRelation& a, const Tolerance& tol = {});
bool is_strict_relation(const LinearRelation& a, const Tolerance& tol = {});

/// <x, Ax> = 0 forces Ax = A0, tested as (y, 0) ∈ graph on the kernel of
/// the monotone form.
bool is_paramonotone_relation(const LinearRelation& a, const Tolerance& tol = {});

/// Boundedness of sup <z−y, y*−x*>: every kernel point (y, y*) of the
/// monotone form must satisfy y* ⊥ dom A and y ⊥ ran A.
bool is_3star_relation(const LinearRelation& a, const Tolerance& tol = {});

CyclicResult is_n_cyclic_relation(const LinearRelation& a, int n, const Tolerance& tol = {});

/// Direct cycle sum over graph points given as stacked (y_i; y_i*) vectors.
double relation_cycle_sum(const std::vector<Vec>& graph_points);

/// Whether <u − y, u* − y*> >= 0 against every graph point, via the exact
/// convex-quadratic minimum over graph coefficients.
bool monotonically_related(const LinearRelation& a, const Vec& u, const Vec& ustar,
                           const Tolerance& tol = {});

/// Monotone and graph dimension d.  A true verdict is guarded by the
/// necessary identities dom⊥ = A0 and A0⊥ = dom.
bool is_maximal_relation(const LinearRelation& a, const Tolerance& tol = {});

/// Single-valued selection x ↦ P_V Ax.  Requires dom ⊆ V and A0 ⊆ V⊥.
LinearRelation selection(const LinearRelation& a, const Subspace& v, const Tolerance& tol = {});

/// Default selection onto V = A0⊥; its graph is contained in A's.
LinearRelation selection(const LinearRelation& a, const Tolerance& tol = {});

/// Extension x ↦ Ax + (dom A)⊥; keeps 3*-monotonicity and makes it
/// paramonotone.
LinearRelation extend_by_domain_perp(const LinearRelation& a, const Tolerance& tol = {});

ClassificationReport classify_relation(const LinearRelation& a, const Tolerance& tol = {});

}  // namespace monoclass
