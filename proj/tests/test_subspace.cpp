#include <doctest.h>

#include "monoclass/generators.hpp"
#include "monoclass/subspace.hpp"

using namespace monoclass;

namespace {
const Tolerance tol{};

Vec e(int i, int n) {
  Vec v(n, 0.0);
  v[i] = 1.0;
  return v;
}
}  // namespace

TEST_CASE("project onto a coordinate axis") {
  const Subspace s = span_of(2, {e(0, 2)}, tol);
  const Vec p = project(s, {3, 4});
  CHECK(p[0] == doctest::Approx(3.0));
  CHECK(p[1] == doctest::Approx(0.0));
}

TEST_CASE("orth_complement of span{e2} in R^3") {
  const Subspace c = orth_complement(span_of(3, {e(1, 3)}, tol), tol);
  CHECK(c.dim() == 2);
  CHECK(contains(c, e(0, 3), tol));
  CHECK(contains(c, e(2, 3), tol));
  CHECK_FALSE(contains(c, e(1, 3), tol));
}

TEST_CASE("intersect of coordinate planes") {
  const Subspace s1 = span_of(3, {e(0, 3), e(1, 3)}, tol);
  const Subspace s2 = span_of(3, {e(1, 3), e(2, 3)}, tol);
  const Subspace meet = intersect(s1, s2, tol);
  REQUIRE(meet.dim() == 1);
  CHECK(contains(meet, e(1, 3), tol));
}

TEST_CASE("span_of drops dependent vectors") {
  const Subspace s = span_of(3, {{1, 1, 0}, {2, 2, 0}, {0, 0, 1}}, tol);
  CHECK(s.dim() == 2);
}

TEST_CASE("contains scales with the vector norm") {
  const Subspace s = span_of(2, {e(0, 2)}, tol);
  CHECK(contains(s, {1e8, 0.0}, tol));
  CHECK_FALSE(contains(s, {0.0, 1e-3}, tol));
}

TEST_CASE("subset laws") {
  Rand rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.uniform_int(1, 7);
    std::vector<Vec> vs;
    for (int i = 0, m = rng.uniform_int(0, n); i < m; ++i) vs.push_back(rng.gaussian_vec(n));
    const Subspace s = span_of(n, vs, tol);
    CHECK(is_subset(s, s, tol));
    CHECK(is_subset(s, orth_complement(orth_complement(s, tol), tol), tol));
    CHECK(orth_complement(s, tol).dim() == n - s.dim());
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const Subspace s = span_of(2, {e(0, 2)}, tol);
  CHECK_THROWS_AS(project(s, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(span_of(2, {{1, 2, 3}}, tol), std::invalid_argument);
  CHECK_THROWS_AS(intersect(s, span_of(3, {e(0, 3)}, tol), tol), std::invalid_argument);
}
