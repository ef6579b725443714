#include "monoclass/oracle.hpp"

#include <cmath>

#include "monoclass/generators.hpp"

namespace monoclass {

namespace {

// Radial scaling: violations of the defining inequalities are cone-shaped
// for linear objects, so powers of two up to 2^10 probe every regime.
double trial_scale(int trial) { return std::ldexp(1.0, trial % 11); }

Vec stack(const Vec& x, const Vec& y) {
  Vec v(x);
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

Vec in_subspace(const Subspace& s, Rand& rng, double scale) {
  Vec v(s.ambient_dim(), 0.0);
  for (const Vec& b : s.basis()) {
    const double c = scale * rng.gaussian();
    for (int i = 0; i < s.ambient_dim(); ++i) v[i] += c * b[i];
  }
  return v;
}

// Growth of f(t) = <z − ty, ty* − x*> over doubling t.
std::optional<GrowthWitness> growth_of(const Vec& z, const Vec& xstar, const Vec& y,
                                       const Vec& ystar, double scale_max, int trial) {
  auto f = [&](double t) { return dot(sub(z, scaled(y, t)), sub(scaled(ystar, t), xstar)); };
  const double initial = f(1.0);
  double value = initial;
  for (double t = 2.0; t <= scale_max; t *= 2.0) value = f(t);
  if (value > 1e6 * (1.0 + std::fabs(initial)))
    return GrowthWitness{z, xstar, y, ystar, initial, value, trial};
  return std::nullopt;
}

}  // namespace

std::optional<OracleCycle> sample_cycle(const MatrixOperator& a, int n, int trials,
                                        std::uint64_t seed, const Tolerance& tol) {
  if (n < 2) throw std::invalid_argument("sample_cycle: n must be >= 2");
  if (trials <= 0) trials = tol.sample_budget;
  for (int trial = 0; trial < trials; ++trial) {
    Rand rng = trial_rng(seed, trial);
    std::vector<Vec> points;
    for (int i = 0; i < n; ++i) points.push_back(rng.gaussian_vec(a.dim(), trial_scale(trial)));
    const double s = cycle_sum(a, points);
    if (s < -tol.abs) return OracleCycle{std::move(points), s, trial};
  }
  return std::nullopt;
}

std::optional<OracleCycle> sample_cycle(const LinearRelation& a, int n, int trials,
                                        std::uint64_t seed, const Tolerance& tol) {
  if (n < 2) throw std::invalid_argument("sample_cycle: n must be >= 2");
  if (trials <= 0) trials = tol.sample_budget;
  const int k = std::max(a.graph_dim(), 1);
  for (int trial = 0; trial < trials; ++trial) {
    Rand rng = trial_rng(seed, trial);
    std::vector<Vec> points;
    for (int i = 0; i < n; ++i) {
      auto [y, ystar] = a.point(rng.gaussian_vec(k, trial_scale(trial)));
      points.push_back(stack(y, ystar));
    }
    const double s = relation_cycle_sum(points);
    if (s < -tol.abs) return OracleCycle{std::move(points), s, trial};
  }
  return std::nullopt;
}

std::optional<GrowthWitness> probe_3star_growth(const MatrixOperator& a, int trials,
                                                std::uint64_t seed, double scale_max,
                                                const Tolerance& tol) {
  if (!is_monotone(a, tol))
    throw std::invalid_argument("probe_3star_growth: operator must be monotone");
  if (trials <= 0) trials = tol.sample_budget;
  for (int trial = 0; trial < trials; ++trial) {
    Rand rng = trial_rng(seed, trial);
    const double scale = trial_scale(trial);
    const Vec z = rng.gaussian_vec(a.dim(), scale);
    const Vec xstar = a.matrix().apply(rng.gaussian_vec(a.dim(), scale));
    const Vec y = rng.gaussian_vec(a.dim());
    if (auto w = growth_of(z, xstar, y, a.matrix().apply(y), scale_max, trial)) return w;
  }
  return std::nullopt;
}

std::optional<GrowthWitness> probe_3star_growth(const LinearRelation& a, int trials,
                                                std::uint64_t seed, double scale_max,
                                                const Tolerance& tol) {
  if (!is_monotone_relation(a, tol))
    throw std::invalid_argument("probe_3star_growth: relation must be monotone");
  if (trials <= 0) trials = tol.sample_budget;
  const int k = std::max(a.graph_dim(), 1);
  for (int trial = 0; trial < trials; ++trial) {
    Rand rng = trial_rng(seed, trial);
    const double scale = trial_scale(trial);
    const Vec z = in_subspace(a.dom(), rng, scale);
    const Vec xstar = in_subspace(a.ran(), rng, scale);
    auto [y, ystar] = a.point(rng.gaussian_vec(k));
    if (auto w = growth_of(z, xstar, y, ystar, scale_max, trial)) return w;
  }
  return std::nullopt;
}

std::optional<ExtensionPoint> probe_extension(const LinearRelation& a, int trials,
                                              std::uint64_t seed, const Tolerance& tol) {
  if (!is_monotone_relation(a, tol))
    throw std::invalid_argument("probe_extension: relation must be monotone");
  if (trials <= 0) trials = tol.sample_budget;
  const int d = a.dim();

  // A candidate is bounded against the graph only if (Yc; Xc) ⊥ (u; u*) for
  // every kernel coefficient c of the monotone form.  That feasible subspace
  // can have measure zero, so odd trials project the draw onto it; the
  // verdict still comes from the exact test.
  const Subspace ker_form = kernel_basis(a.monotone_form(), tol);
  std::vector<Vec> normals;
  for (const Vec& c : ker_form.basis())
    normals.push_back(stack(a.y_part().apply(c), a.x_part().apply(c)));
  const Subspace infeasible = span_of(2 * d, normals, tol);

  // The extension set is a cone, so candidates live on the unit sphere, and
  // only points a clear margin away from the graph are considered: anything
  // closer sits inside the tolerance fuzz of the exact test.
  constexpr double graph_margin = 1e-3;

  for (int trial = 0; trial < trials; ++trial) {
    Rand rng = trial_rng(seed, trial);
    Vec cand = rng.gaussian_vec(2 * d);
    if (trial % 2 == 1 && infeasible.dim() > 0) cand = sub(cand, project(infeasible, cand));
    const double cn = norm(cand);
    if (cn < 1e-8) continue;
    cand = scaled(cand, 1.0 / cn);
    if (norm(sub(cand, project(a.graph(), cand))) < graph_margin) continue;
    const Vec u(cand.begin(), cand.begin() + d);
    const Vec ustar(cand.begin() + d, cand.end());
    if (monotonically_related(a, u, ustar, tol)) return ExtensionPoint{u, ustar, trial};
  }
  return std::nullopt;
}

}  // namespace monoclass
