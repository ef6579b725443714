#include "monoclass/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace monoclass {

MatrixOperator::MatrixOperator(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("MatrixOperator: matrix must be square");
}

Matrix symmetric_part(const MatrixOperator& a) { return a.matrix().symmetrized(); }

bool is_monotone(const MatrixOperator& a, const Tolerance& tol) {
  return is_psd(a.matrix(), tol).psd;
}

bool is_strictly_monotone(const MatrixOperator& a, const Tolerance& tol) {
  if (!is_monotone(a, tol)) return false;
  return kernel_basis(symmetric_part(a), tol).dim() == 0;
}

bool is_paramonotone(const MatrixOperator& a, const Tolerance& tol) {
  if (!is_monotone(a, tol)) return false;
  const Subspace ker_sym = kernel_basis(symmetric_part(a), tol);
  const double thr = zero_threshold(tol, a.matrix().max_abs());
  for (const Vec& v : ker_sym.basis())
    if (norm(a.matrix().apply(v)) > thr) return false;
  return true;
}

AlphaStar brezis_haraux_alpha(const MatrixOperator& a, const Tolerance& tol) {
  if (!is_monotone(a, tol))
    throw std::invalid_argument("brezis_haraux_alpha: operator must be monotone");
  if (a.is_zero()) return {true, 0.0};

  const Matrix sym = symmetric_part(a);
  const Matrix gram = a.matrix().transpose() * a.matrix();
  const auto psd_at = [&](double alpha) { return is_psd(sym - alpha * gram, tol).psd; };

  // A nonzero operator fails the inequality for large alpha, so doubling
  // terminates.
  double lo = 0.0;
  double hi = 1.0;
  int it = 0;
  while (psd_at(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++it > tol.max_iter) throw std::logic_error("brezis_haraux_alpha: doubling did not terminate");
  }
  for (it = 0; it < tol.max_iter && (hi - lo) > tol.bisect_rel * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (psd_at(mid) ? lo : hi) = mid;
  }
  return {false, lo};
}

bool is_3star(const MatrixOperator& a, const Tolerance& tol) {
  if (!is_monotone(a, tol)) return false;
  if (a.is_zero()) return true;  // bounded range
  const AlphaStar alpha = brezis_haraux_alpha(a, tol);
  return alpha.unbounded || alpha.value > alpha_positive_floor(tol);
}

Matrix cyclic_gram(const MatrixOperator& a, int n) {
  if (n < 2) throw std::invalid_argument("cyclic_gram: n must be >= 2");
  const int d = a.dim();
  Matrix c(n * d, n * d);
  const Matrix sym = symmetric_part(a);
  const Matrix half = 0.5 * a.matrix();
  const Matrix half_t = half.transpose();
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    c.add_block(i * d, i * d, sym);
    c.add_block(j * d, i * d, half, -1.0);
    c.add_block(i * d, j * d, half_t, -1.0);
  }
  return c;
}

double cycle_sum(const MatrixOperator& a, const std::vector<Vec>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw std::invalid_argument("cycle_sum: need at least two points");
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec& x = points[i];
    const Vec& next = points[(i + 1) % n];
    s += dot(sub(x, next), a.matrix().apply(x));
  }
  return s;
}

CyclicResult is_n_cyclic(const MatrixOperator& a, int n, const Tolerance& tol) {
  const Matrix gram = cyclic_gram(a, n);
  const PsdResult psd = is_psd(gram, tol);
  if (psd.psd) return {true, std::nullopt};

  const int d = a.dim();
  CycleWitness w;
  for (int i = 0; i < n; ++i)
    w.points.emplace_back(psd.witness.begin() + i * d, psd.witness.begin() + (i + 1) * d);
  w.cycle_sum = cycle_sum(a, w.points);
  return {false, std::move(w)};
}

bool necessary_3cm_2x2(const MatrixOperator& op) {
  if (op.dim() != 2) throw std::invalid_argument("necessary_3cm_2x2: operator must be 2x2");
  // Layout [[a, c],[b, d]].
  const Matrix& m = op.matrix();
  const double a = m(0, 0), c = m(0, 1), b = m(1, 0), d = m(1, 1);
  return std::max(std::fabs(b), std::fabs(c)) <= a + d;
}

bool is_maximal(const MatrixOperator& a, const Tolerance& tol) {
  // Monotone linear operators with full domain are maximal monotone.
  return is_monotone(a, tol);
}

ClassificationReport classify(const MatrixOperator& a, const Tolerance& tol) {
  ClassificationReport r;
  r.dim = a.dim();
  const Matrix sym = symmetric_part(a);
  r.lambda_min_sym = min_eig_sym(sym, tol);
  r.ker_sym = kernel_basis(sym, tol);
  r.ker_full = kernel_basis(a.matrix(), tol);
  r.monotone = is_monotone(a, tol);

  const CyclicResult c3 = is_n_cyclic(a, 3, tol);
  if (!c3.cyclic) r.cycle_witness = c3.witness;

  if (!r.monotone) {
    r.notes.push_back("not monotone: all five classes fail");
    return r;
  }

  r.code.mm = true;
  r.code.sm = r.ker_sym.dim() == 0;
  r.code.pm = is_paramonotone(a, tol);
  r.code.cm3 = c3.cyclic;
  r.alpha_star = brezis_haraux_alpha(a, tol);
  r.code.star3 = is_3star(a, tol);

  // The kernel route is the more robust of the two equivalent decisions;
  // reconcile a hairline alpha*-threshold disagreement toward it.
  if (r.code.star3 != r.code.pm) {
    r.notes.push_back("alpha* decision within threshold of the boundary; using kernel criterion");
    r.code.star3 = r.code.pm;
  }
  return r;
}

}  // namespace monoclass
