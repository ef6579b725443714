#include "monoclass/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monoclass {

namespace {

// Two-pass modified Gram-Schmidt of v against an orthonormal set.
Vec orthogonalize(Vec v, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const Vec& b : basis) {
      const double c = dot(v, b);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
  return v;
}

}  // namespace

Subspace::Subspace(int ambient_dim, std::vector<Vec> orthonormal_basis)
    : ambient_(ambient_dim), basis_(std::move(orthonormal_basis)) {
  if (ambient_ < 1) throw std::invalid_argument("Subspace: ambient dimension must be positive");
  if (static_cast<int>(basis_.size()) > ambient_)
    throw std::invalid_argument("Subspace: basis larger than ambient dimension");
  for (const Vec& b : basis_)
    if (static_cast<int>(b.size()) != ambient_)
      throw std::invalid_argument("Subspace: basis vector of wrong length");
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Vec> basis;
  for (int i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, 0.0);
    e[i] = 1.0;
    basis.push_back(std::move(e));
  }
  return Subspace(ambient_dim, std::move(basis));
}

Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors, const Tolerance& tol) {
  std::vector<Vec> basis;
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("span_of: vector length does not match ambient dimension");
    Vec r = orthogonalize(v, basis);
    const double rn = norm(r);
    if (rn > tol.abs * std::max(1.0, norm(v))) basis.push_back(scaled(r, 1.0 / rn));
    if (static_cast<int>(basis.size()) == ambient_dim) break;
  }
  return Subspace(ambient_dim, std::move(basis));
}

Vec project(const Subspace& s, const Vec& x) {
  if (static_cast<int>(x.size()) != s.ambient_dim())
    throw std::invalid_argument("project: ambient dimension mismatch");
  Vec p(x.size(), 0.0);
  for (const Vec& b : s.basis()) {
    const double c = dot(x, b);
    for (size_t i = 0; i < p.size(); ++i) p[i] += c * b[i];
  }
  return p;
}

bool contains(const Subspace& s, const Vec& x, const Tolerance& tol) {
  const Vec r = sub(x, project(s, x));
  return norm(r) <= tol.abs * std::max(1.0, norm(x));
}

bool is_subset(const Subspace& inner, const Subspace& outer, const Tolerance& tol) {
  if (inner.ambient_dim() != outer.ambient_dim())
    throw std::invalid_argument("is_subset: ambient dimension mismatch");
  for (const Vec& b : inner.basis())
    if (!contains(outer, b, tol)) return false;
  return true;
}

Subspace orth_complement(const Subspace& s, const Tolerance& tol) {
  (void)tol;
  const int n = s.ambient_dim();
  std::vector<Vec> work = s.basis();
  std::vector<Vec> comp;
  // Greedy completion by standard basis vectors.  Any residual cutoff below
  // 1/sqrt(n) collects exactly n - dim vectors.
  constexpr double cutoff = 1e-4;
  for (int i = 0; i < n && static_cast<int>(work.size()) < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    Vec r = orthogonalize(std::move(e), work);
    const double rn = norm(r);
    if (rn > cutoff) {
      Vec u = scaled(r, 1.0 / rn);
      work.push_back(u);
      comp.push_back(std::move(u));
    }
  }
  if (static_cast<int>(comp.size()) != n - s.dim())
    throw std::logic_error("orth_complement: completion failed (basis not orthonormal?)");
  return Subspace(n, std::move(comp));
}

Subspace intersect(const Subspace& s1, const Subspace& s2, const Tolerance& tol) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const Subspace c1 = orth_complement(s1, tol);
  const Subspace c2 = orth_complement(s2, tol);
  std::vector<Vec> both = c1.basis();
  both.insert(both.end(), c2.basis().begin(), c2.basis().end());
  return orth_complement(span_of(s1.ambient_dim(), both, tol), tol);
}

}  // namespace monoclass
