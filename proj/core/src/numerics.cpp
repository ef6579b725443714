#include "monoclass/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace monoclass {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p,q), accumulating into v.
void rotate(Matrix& a, Matrix& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::fabs(theta) > 1e12) {
    t = 1.0 / (2.0 * theta);
  } else {
    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  for (int k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenSym sym_eigen(const Matrix& m, const Tolerance& tol) {
  if (!m.square()) throw std::invalid_argument("sym_eigen: matrix must be square");
  (void)tol;
  const int n = m.rows();
  Matrix a = m.is_symmetric(0.0) ? m : m.symmetrized();
  Matrix v = Matrix::identity(n);

  const double scale = a.frobenius();
  if (scale > 0.0) {
    const double stop = 1e-12 * scale;
    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      if (off_diagonal_frobenius(a) <= stop) break;
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenSym out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double min_eig_sym(const Matrix& m, const Tolerance& tol) {
  return sym_eigen(m, tol).values.front();
}

PsdResult is_psd(const Matrix& m, const Tolerance& tol) {
  if (!m.square()) throw std::invalid_argument("is_psd: matrix must be square");
  const EigenSym eig = sym_eigen(m, tol);
  PsdResult r;
  r.min_eigenvalue = eig.values.front();
  r.psd = r.min_eigenvalue >= -zero_threshold(tol, m.max_abs());
  if (!r.psd) r.witness = eig.vectors.column(0);
  return r;
}

Subspace kernel_basis(const Matrix& m, const Tolerance& tol) {
  const double thr = zero_threshold(tol, m.max_abs());

  if (m.square() && m.is_symmetric(tol.abs)) {
    const EigenSym eig = sym_eigen(m, tol);
    std::vector<Vec> vecs;
    for (int k = 0; k < m.cols(); ++k)
      if (std::fabs(eig.values[k]) <= thr) vecs.push_back(eig.vectors.column(k));
    return span_of(m.cols(), vecs, tol);
  }

  // Symmetric embedding [[0, Mᵀ],[M, 0]]: eigenvalues are ±singular values,
  // and the x-parts of its numerical null space span ker M.
  const int nc = m.cols();
  const int nr = m.rows();
  Matrix b(nc + nr, nc + nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      b(nc + i, j) = m(i, j);
      b(j, nc + i) = m(i, j);
    }
  const EigenSym eig = sym_eigen(b, tol);
  std::vector<Vec> xparts;
  for (int k = 0; k < nc + nr; ++k) {
    if (std::fabs(eig.values[k]) > thr) continue;
    const Vec col = eig.vectors.column(k);
    xparts.emplace_back(col.begin(), col.begin() + nc);
  }
  // Larger x-parts first: the null space mixes ker M with ker Mᵀ directions.
  std::sort(xparts.begin(), xparts.end(),
            [](const Vec& a, const Vec& b) { return norm(a) > norm(b); });
  return span_of(nc, xparts, tol);
}

}  // namespace monoclass
