#pragma once

#include <cstdint>
#include <optional>

#include "monoclass/operators.hpp"
#include "monoclass/relations.hpp"

namespace monoclass {

/// Brute-force falsifiers that evaluate the defining inequalities directly,
/// sharing no code path with the PSD/kernel decision procedures.
///
/// Sampling is deterministic: trial i draws from a generator seeded by
/// (seed, i), and the first witness in trial order is returned, so results
/// do not depend on evaluation order.  A missing witness is evidence, not
/// proof.  Passing trials <= 0 selects tol.sample_budget.

struct OracleCycle {
  std::vector<Vec> points;  // x_i for operators, stacked (y_i; y_i*) for relations
  double cycle_sum = 0.0;
  int trial = 0;
};

std::optional<OracleCycle> sample_cycle(const MatrixOperator& a, int n, int trials,
                                        std::uint64_t seed, const Tolerance& tol = {});
std::optional<OracleCycle> sample_cycle(const LinearRelation& a, int n, int trials,
                                        std::uint64_t seed, const Tolerance& tol = {});

struct GrowthWitness {
  Vec z, xstar;     // fixed pair from dom × ran
  Vec y, ystar;     // graph direction scaled without the product decaying
  double initial = 0.0;
  double final_value = 0.0;
  int trial = 0;
};

/// Looks for unbounded growth of <z − ty, ty* − x*> over doubling t.
std::optional<GrowthWitness> probe_3star_growth(const MatrixOperator& a, int trials,
                                                std::uint64_t seed, double scale_max = 1 << 30,
                                                const Tolerance& tol = {});
std::optional<GrowthWitness> probe_3star_growth(const LinearRelation& a, int trials,
                                                std::uint64_t seed, double scale_max = 1 << 30,
                                                const Tolerance& tol = {});

struct ExtensionPoint {
  Vec u, ustar;
  int trial = 0;
};

/// Looks for a monotonically related point outside the graph.
std::optional<ExtensionPoint> probe_extension(const LinearRelation& a, int trials,
                                              std::uint64_t seed, const Tolerance& tol = {});

}  // namespace monoclass
