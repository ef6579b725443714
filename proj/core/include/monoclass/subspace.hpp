#pragma once

#include <vector>

#include "monoclass/matrix.hpp"
#include "monoclass/tolerance.hpp"

namespace monoclass {

/// Linear subspace of R^n held as an orthonormal basis (possibly empty).
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  Subspace(int ambient_dim, std::vector<Vec> orthonormal_basis);

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  int ambient_;
  std::vector<Vec> basis_;
};

/// Orthonormalizes `vectors`, dropping numerically dependent ones.
Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors,
                 const Tolerance& tol = {});

Vec project(const Subspace& s, const Vec& x);
bool contains(const Subspace& s, const Vec& x, const Tolerance& tol = {});
bool is_subset(const Subspace& inner, const Subspace& outer,
               const Tolerance& tol = {});
Subspace orth_complement(const Subspace& s, const Tolerance& tol = {});
Subspace intersect(const Subspace& s1, const Subspace& s2,
                   const Tolerance& tol = {});

}  // namespace monoclass
