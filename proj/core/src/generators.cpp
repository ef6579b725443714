#include "monoclass/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monoclass {

std::uint64_t Rand::bits() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rand::uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

double Rand::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rand::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
}

double Rand::gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec Rand::gaussian_vec(int n, double scale) {
  Vec v(n);
  for (double& x : v) x = scale * gaussian();
  return v;
}

Rand trial_rng(std::uint64_t seed, int trial) {
  return Rand(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1)));
}

Matrix random_orthogonal(int d, Rand& rng) {
  // Gram-Schmidt of gaussian columns; resample on (measure-zero) dependence.
  std::vector<Vec> cols;
  while (static_cast<int>(cols.size()) < d) {
    Vec v = rng.gaussian_vec(d);
    for (const Vec& b : cols) {
      const double c = dot(v, b);
      for (int i = 0; i < d; ++i) v[i] -= c * b[i];
    }
    const double n = norm(v);
    if (n > 1e-6) cols.push_back(scaled(v, 1.0 / n));
  }
  Matrix q(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) q(i, j) = cols[j][i];
  return q;
}

Matrix random_matrix(int rows, int cols, Rand& rng, double scale) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = scale * rng.gaussian();
  return m;
}

namespace {

// Symmetric PSD of rank one, [[r², ±rs],[±rs, s²]], on a dyadic grid so the
// closed-form criterion 4ad = (b+c)² holds exactly in floating point.
MatrixOperator symmetric_singular_2x2(Rand& rng) {
  const double r = rng.uniform_int(2, 12) / 8.0;
  const double s = rng.uniform_int(2, 12) / 8.0;
  const double b = (rng.uniform() < 0.5 ? -1.0 : 1.0) * r * s;
  return MatrixOperator(Matrix(2, 2, {r * r, b, b, s * s}));
}

}  // namespace

MatrixOperator random_monotone_2x2(Rand& rng) {
  const double pick = rng.uniform();
  if (pick < 0.35) {
    // Rejection sampling against the closed-form monotonicity criterion.
    for (;;) {
      const double a = rng.uniform(-3, 3), c = rng.uniform(-3, 3);
      const double b = rng.uniform(-3, 3), d = rng.uniform(-3, 3);
      if (a + d >= 0 && 4 * a * d >= (b + c) * (b + c))
        return MatrixOperator(Matrix(2, 2, {a, c, b, d}));
    }
  }
  if (pick < 0.55) {
    return symmetric_singular_2x2(rng);
  }
  if (pick < 0.75) {
    // Singular symmetric part plus a dyadic skew leak: monotone, not
    // paramonotone, and b + c is exact.
    const double s = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform_int(4, 16) / 8.0;
    Matrix m = symmetric_singular_2x2(rng).matrix();
    m(0, 1) -= s;
    m(1, 0) += s;
    return MatrixOperator(std::move(m));
  }
  if (pick < 0.9) {
    // Strictly monotone rotation, scaled.
    const double theta = rng.uniform(0.0, std::numbers::pi / 2 - 0.05);
    const double lambda = rng.uniform(0.5, 2.0);
    const double c = lambda * std::cos(theta), s = lambda * std::sin(theta);
    return MatrixOperator(Matrix(2, 2, {c, -s, s, c}));
  }
  // Scaled quarter-turn: monotone with zero symmetric part.
  const double lambda = rng.uniform(0.5, 2.0);
  return MatrixOperator(Matrix(2, 2, {0, -lambda, lambda, 0}));
}

MatrixOperator random_monotone(int d, Rand& rng) {
  if (d < 2) throw std::invalid_argument("random_monotone: need d >= 2");
  const double pick = rng.uniform();
  if (pick < 0.05) return MatrixOperator(Matrix(d, d));  // zero

  const Matrix q = random_orthogonal(d, rng);
  auto psd_of_rank = [&](int rank) {
    Matrix lambda(d, d);
    for (int i = 0; i < rank; ++i) lambda(i, i) = rng.uniform(0.15, 3.0);
    return q * lambda * q.transpose();
  };
  auto skew_on_first = [&](int count) {
    // Antisymmetric, supported on the span of the first `count` columns of q.
    Matrix k(d, d);
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        const double s = rng.gaussian();
        k(i, j) = s;
        k(j, i) = -s;
      }
    return q * k * q.transpose();
  };

  if (pick < 0.35) {
    // Strictly monotone plus arbitrary skew.
    const Matrix g = random_matrix(d, d, rng);
    const Matrix skew = 0.5 * (g - g.transpose());
    return MatrixOperator(psd_of_rank(d) + skew);
  }
  if (pick < 0.55) {
    // Symmetric PSD, singular.
    return MatrixOperator(psd_of_rank(rng.uniform_int(1, d - 1)));
  }
  if (pick < 0.75) {
    // Paramonotone, non-symmetric: skew confined to the range.
    const int rank = rng.uniform_int(1, d - 1);
    return MatrixOperator(psd_of_rank(rank) + skew_on_first(rank));
  }
  // Not paramonotone: a rotation leak between two kernel directions.
  const int rank = d >= 3 ? rng.uniform_int(0, d - 2) : 0;
  Matrix leak(d, d);
  const double s = rng.uniform(0.5, 2.0);
  leak(rank, rank + 1) = -s;
  leak(rank + 1, rank) = s;
  return MatrixOperator(psd_of_rank(rank) + q * leak * q.transpose());
}

MatrixOperator random_operator(int d, Rand& rng, double scale) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = rng.uniform(-scale, scale);
  return MatrixOperator(std::move(m));
}

LinearRelation random_monotone_relation(int d, Rand& rng, const Tolerance& tol) {
  const Matrix q = random_orthogonal(d, rng);
  const int p = rng.uniform_int(0, d);              // dim of the domain D
  const int z = rng.uniform_int(0, d - p);          // dim of Z ⊆ D⊥

  std::vector<Vec> vecs;
  if (p == 1) {
    const double m = rng.uniform() < 0.3 ? 0.0 : rng.uniform(0.2, 2.0);
    Vec g(2 * d, 0.0);
    for (int i = 0; i < d; ++i) {
      g[i] = q(i, 0);
      g[d + i] = m * q(i, 0);
    }
    vecs.push_back(std::move(g));
  } else if (p >= 2) {
    const Matrix m = random_monotone(p, rng).matrix();
    for (int jcol = 0; jcol < p; ++jcol) {
      Vec g(2 * d, 0.0);
      for (int i = 0; i < d; ++i) {
        g[i] = q(i, jcol);
        double yi = 0.0;
        for (int r = 0; r < p; ++r) yi += q(i, r) * m(r, jcol);
        g[d + i] = yi;
      }
      vecs.push_back(std::move(g));
    }
  }
  for (int j = 0; j < z; ++j) {
    Vec g(2 * d, 0.0);
    for (int i = 0; i < d; ++i) g[d + i] = q(i, p + j);
    vecs.push_back(std::move(g));
  }
  return LinearRelation::from_graph_vectors(d, vecs, tol);
}

}  // namespace monoclass
