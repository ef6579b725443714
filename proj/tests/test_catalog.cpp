#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "monoclass/catalog.hpp"

using namespace monoclass;

namespace {
const Tolerance tol{};
const double pi = std::numbers::pi;
}  // namespace

TEST_CASE("rotation constructor") {
  CHECK((rotation(0.0).matrix() - Matrix::identity(2)).max_abs() == 0.0);
  const Matrix quarter = rotation(pi / 2).matrix();
  CHECK(quarter(0, 1) == doctest::Approx(-1.0));
  CHECK(quarter(1, 0) == doctest::Approx(1.0));
  CHECK(classify(rotation(pi / 2), tol).code.str() == "00010");
  CHECK(classify(rotation(1.3), tol).code.str() == "11011");
}

TEST_CASE("tilde_r facts") {
  CHECK(classify(tilde_r(), tol).code.str() == "11011");
  CHECK_FALSE(necessary_3cm_2x2(tilde_r()));
  const AlphaStar a = brezis_haraux_alpha(tilde_r(), tol);
  CHECK_FALSE(a.unbounded);
  CHECK(a.value > 0.0);
}

TEST_CASE("coordinate projection family") {
  CHECK(classify(coordinate_projection(2, 1), tol).code.str() == "10111");
  CHECK(classify(coordinate_projection(3, 3), tol).code.str() == "11111");
  CHECK(classify(coordinate_projection(2, 0), tol).code.str() == "10111");
  CHECK_THROWS_AS(coordinate_projection(2, 3), std::invalid_argument);
}

TEST_CASE("example_3x3 facts") {
  CHECK(classify(example_3x3(), tol).code.str() == "10011");
  const Subspace ker = kernel_basis(symmetric_part(example_3x3()), tol);
  REQUIRE(ker.dim() == 1);
  const double s = std::sqrt(2.0);
  CHECK(std::fabs(std::fabs(dot(ker.basis()[0], {-1 / s, 0, 1 / s})) - 1.0) <= 1e-9);
}

TEST_CASE("symmetric paramonotone family") {
  const MatrixOperator ones = symmetric_pm_family(1, 1);
  CHECK((ones.matrix() - Matrix::from_rows({{1, 1}, {1, 1}})).max_abs() == 0.0);
  CHECK(classify(ones, tol).code.str() == "10111");
  CHECK(classify(symmetric_pm_family(1, 0), tol).code.str() == "10111");

  const ClassificationReport r = classify(symmetric_pm_family(2, 0.01), tol);
  CHECK(r.code.pm);
  CHECK_FALSE(r.code.sm);
  CHECK_THROWS_AS(symmetric_pm_family(0, 1), std::invalid_argument);
}

TEST_CASE("rotation_chain: codes and alpha* decay") {
  CHECK(classify(rotation_chain(1), tol).code.str() == "11111");
  const ClassificationReport r3 = classify(rotation_chain(3), tol);
  CHECK(r3.code.sm);
  CHECK(r3.code.mm);
  CHECK_FALSE(r3.code.cm3);
  CHECK(r3.code.str() == "11011");

  double prev = 2.0;
  for (int n = 1; n <= 5; ++n) {
    const AlphaStar a = brezis_haraux_alpha(rotation_chain(n), tol);
    REQUIRE_FALSE(a.unbounded);
    CHECK(a.value == doctest::Approx(rotation_chain_alpha(n)).epsilon(1e-6));
    CHECK(a.value < prev);
    prev = a.value;
  }
  CHECK_THROWS_AS(rotation_chain(0), std::invalid_argument);
}

TEST_CASE("every catalog entry classifies to its expected code") {
  for (const CatalogEntry& e : operator_catalog(tol))
    CHECK_MESSAGE(classify(e.op(), tol).code == e.expected_code, e.name);
  for (const CatalogEntry& e : relation_catalog(tol))
    CHECK_MESSAGE(classify_relation(e.relation(), tol).code == e.expected_code, e.name);
}

TEST_CASE("table rows are witnessed by the catalog") {
  std::set<std::string> codes;
  for (const CatalogEntry& e : operator_catalog(tol)) {
    const ClassCode c = classify(e.op(), tol).code;
    CHECK(c.mm);  // full-domain monotone operators are maximal
    codes.insert(c.str());
  }
  for (const char* needed : {"00010", "10111", "11011", "11111", "10011"})
    CHECK_MESSAGE(codes.count(needed) == 1, needed);
}
