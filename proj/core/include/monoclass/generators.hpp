#pragma once

#include <cstdint>

#include "monoclass/matrix.hpp"
#include "monoclass/operators.hpp"
#include "monoclass/relations.hpp"

namespace monoclass {

/// Deterministic random source (splitmix-seeded xorshift via mt19937_64,
/// with hand-rolled uniform/gaussian so sequences are platform-stable).
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t bits();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  int uniform_int(int lo, int hi);       // inclusive
  double gaussian();                     // standard normal, Box-Muller

  Vec gaussian_vec(int n, double scale = 1.0);

 private:
  std::uint64_t state_;
};

/// Derives the generator for a given trial index; witnesses found this way
/// do not depend on how trials are scheduled.
Rand trial_rng(std::uint64_t seed, int trial);

Matrix random_orthogonal(int d, Rand& rng);
Matrix random_matrix(int rows, int cols, Rand& rng, double scale = 1.0);

/// Random 2×2 monotone operators mixing strictly monotone, symmetric
/// singular, and non-paramonotone instances, each kept a safe margin from
/// the class boundaries so tolerance decisions are unambiguous.
MatrixOperator random_monotone_2x2(Rand& rng);

/// Same mix for d ≥ 2: strictly monotone + skew, singular symmetric PSD,
/// paramonotone non-symmetric (skew supported on the range), non-paramonotone
/// (rotation leak on kernel directions), and the zero operator.
MatrixOperator random_monotone(int d, Rand& rng);

/// Arbitrary (not necessarily monotone) operator with uniform entries.
MatrixOperator random_operator(int d, Rand& rng, double scale = 3.0);

/// Monotone relation: graph {(x, Mx) : x ∈ D} + {0}×Z for a random subspace
/// D, monotone M on D, and Z ⊆ D⊥.  Maximal exactly when dim D + dim Z = d.
LinearRelation random_monotone_relation(int d, Rand& rng, const Tolerance& tol = {});

}  // namespace monoclass
