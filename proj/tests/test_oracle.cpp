#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monoclass/catalog.hpp"
#include "monoclass/oracle.hpp"

using namespace monoclass;

namespace {
const Tolerance tol{};
const double pi = std::numbers::pi;
constexpr int kBudget = 10000;
constexpr std::uint64_t kSeed = 42;
}  // namespace

TEST_CASE("sample_cycle finds violations exactly where the classifier does") {
  const auto quarter = sample_cycle(rotation(pi / 2), 3, kBudget, kSeed, tol);
  REQUIRE(quarter.has_value());
  CHECK(quarter->cycle_sum < 0.0);

  CHECK_FALSE(sample_cycle(MatrixOperator(Matrix::identity(2)), 3, kBudget, kSeed, tol).has_value());

  for (const CatalogEntry& e : operator_catalog(tol)) {
    const bool cyclic = is_n_cyclic(e.op(), 3, tol).cyclic;
    CHECK_MESSAGE(sample_cycle(e.op(), 3, kBudget, kSeed, tol).has_value() == !cyclic, e.name);
  }
}

TEST_CASE("sampled cycle matches the quadratic form evaluation") {
  const auto w = sample_cycle(tilde_r(), 3, kBudget, kSeed, tol);
  REQUIRE(w.has_value());
  Vec stacked;
  for (const Vec& p : w->points) stacked.insert(stacked.end(), p.begin(), p.end());
  const Matrix gram = cyclic_gram(tilde_r(), 3);
  CHECK(std::fabs(dot(stacked, gram.apply(stacked)) - w->cycle_sum) <=
        1e-10 * std::max(1.0, std::fabs(w->cycle_sum)));
  // independent re-evaluation
  CHECK(cycle_sum(tilde_r(), w->points) == doctest::Approx(w->cycle_sum));
}

TEST_CASE("sample_cycle is deterministic in the seed") {
  const auto a = sample_cycle(rotation(1.2), 3, kBudget, kSeed, tol);
  const auto b = sample_cycle(rotation(1.2), 3, kBudget, kSeed, tol);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->trial == b->trial);
  CHECK(a->cycle_sum == b->cycle_sum);
  const auto c = sample_cycle(rotation(1.2), 3, kBudget, kSeed + 1, tol);
  REQUIRE(c.has_value());  // a different seed still finds some witness
}

TEST_CASE("relation cycle sampling") {
  const auto quarter = sample_cycle(LinearRelation::from_operator(rotation(pi / 2), tol), 3,
                                    kBudget, kSeed, tol);
  REQUIRE(quarter.has_value());
  CHECK(relation_cycle_sum(quarter->points) == doctest::Approx(quarter->cycle_sum));
  CHECK(quarter->cycle_sum < 0.0);

  CHECK_FALSE(sample_cycle(max_r2_relation(tol), 3, kBudget, kSeed, tol).has_value());
}

TEST_CASE("probe_3star_growth") {
  CHECK(probe_3star_growth(rotation(pi / 2), kBudget, kSeed, 1 << 30, tol).has_value());
  CHECK_FALSE(probe_3star_growth(MatrixOperator(Matrix::identity(2)), kBudget, kSeed, 1 << 30, tol)
                  .has_value());
  CHECK_FALSE(probe_3star_growth(star_not_pm_relation(tol), kBudget, kSeed, 1 << 30, tol)
                  .has_value());
  CHECK(probe_3star_growth(LinearRelation::from_operator(rotation(pi / 2), tol), kBudget, kSeed,
                           1 << 30, tol)
            .has_value());
  CHECK_THROWS_AS(probe_3star_growth(rotation(pi / 2 + 0.1), 10, kSeed, 1 << 30, tol),
                  std::invalid_argument);
}

TEST_CASE("probe_extension") {
  const auto non_max = probe_extension(non_max_relation(tol), kBudget, kSeed, tol);
  REQUIRE(non_max.has_value());
  CHECK(monotonically_related(non_max_relation(tol), non_max->u, non_max->ustar, tol));

  const auto star = probe_extension(star_not_pm_relation(tol), kBudget, kSeed, tol);
  REQUIRE(star.has_value());
  CHECK(monotonically_related(star_not_pm_relation(tol), star->u, star->ustar, tol));

  CHECK_FALSE(probe_extension(LinearRelation::from_operator(MatrixOperator(Matrix::identity(2)),
                                                            tol),
                              kBudget, kSeed, tol)
                  .has_value());

  for (const CatalogEntry& e : relation_catalog(tol)) {
    const bool maximal = is_maximal_relation(e.relation(), tol);
    const auto found = probe_extension(e.relation(), kBudget, kSeed, tol);
    CHECK_MESSAGE(found.has_value() == !maximal, e.name);
  }
}
