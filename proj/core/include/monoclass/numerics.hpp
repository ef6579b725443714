#pragma once

#include <vector>

#include "monoclass/matrix.hpp"
#include "monoclass/subspace.hpp"
#include "monoclass/tolerance.hpp"

namespace monoclass {

struct EigenSym {
  Vec values;      // ascending
  Matrix vectors;  // orthonormal, column i pairs with values[i]
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.  Non-symmetric
/// input is symmetrized first.  Deterministic for a given input.
EigenSym sym_eigen(const Matrix& m, const Tolerance& tol = {});

/// Smallest eigenvalue of (M + Mᵀ)/2.
double min_eig_sym(const Matrix& m, const Tolerance& tol = {});

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
  Vec witness;  // unit vector with wᵀMw < 0; empty when psd

  explicit operator bool() const { return psd; }
};

/// PSD decision for (M + Mᵀ)/2 with threshold −tol.eig_rel·max(1, ‖M‖_max).
PsdResult is_psd(const Matrix& m, const Tolerance& tol = {});

/// Orthonormal basis of the numerical kernel {x : ‖Mx‖ ≤ τ‖x‖} with
/// τ = tol.eig_rel·max(1, ‖M‖_max).  Symmetric input uses its own
/// eigendecomposition; otherwise the [[0, Mᵀ],[M, 0]] embedding supplies the
/// singular spectrum without squaring it.
Subspace kernel_basis(const Matrix& m, const Tolerance& tol = {});

}  // namespace monoclass
