#include "monoclass/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "monoclass/catalog.hpp"
#include "monoclass/generators.hpp"
#include "monoclass/numerics.hpp"
#include "monoclass/oracle.hpp"
#include "monoclass/products.hpp"

namespace monoclass {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.messages.size() < 10) result_.messages.push_back(what);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

bool symmetric_within(const Matrix& m, double tol_abs) { return m.is_symmetric(tol_abs); }

SuiteResult suite_numerics(const VerifyOptions& o) {
  Suite s("numerics");
  Rand rng(o.seed);
  const int trials = std::max(o.budget / 100, 20);
  for (int t = 0; t < trials; ++t) {
    const int d = rng.uniform_int(1, 8);
    const Matrix g = random_matrix(d, d, rng);
    const Matrix m = g.symmetrized();
    const EigenSym eig = sym_eigen(m, o.tol);

    Matrix lambda(d, d);
    for (int i = 0; i < d; ++i) lambda(i, i) = eig.values[i];
    const Matrix recon = eig.vectors * lambda * eig.vectors.transpose();
    s.check((recon - m).max_abs() <= 1e-6 * std::max(1.0, m.max_abs()),
            "eigendecomposition reconstruction");

    const Matrix full = random_matrix(d, rng.uniform_int(1, 8), rng);
    const Subspace full_null = kernel_basis(full, o.tol);
    for (const Vec& v : full_null.basis())
      s.check(norm(full.apply(v)) <= 1e-6 * std::max(1.0, full.max_abs()),
              "kernel vector residual");

    std::vector<Vec> some;
    for (int i = 0; i < rng.uniform_int(0, d); ++i) some.push_back(rng.gaussian_vec(d));
    const Subspace sp = span_of(d, some, o.tol);
    s.check(is_subset(sp, sp, o.tol), "is_subset reflexive");
    s.check(is_subset(sp, orth_complement(orth_complement(sp, o.tol), o.tol), o.tol),
            "double complement contains the subspace");

    s.check(is_psd(g, o.tol).psd == is_psd(g.symmetrized(), o.tol).psd,
            "is_psd agrees with symmetrized input");
  }
  return s.take();
}

SuiteResult suite_operators(const VerifyOptions& o) {
  Suite s("operators");
  Rand rng(o.seed + 1);

  for (int t = 0; t < o.budget; ++t) {
    const MatrixOperator a = random_monotone_2x2(rng);
    const Matrix& m = a.matrix();
    const bool closed_form =
        m(0, 0) + m(1, 1) >= 0 &&
        4 * m(0, 0) * m(1, 1) >= (m(1, 0) + m(0, 1)) * (m(1, 0) + m(0, 1));
    s.check(is_monotone(a, o.tol) == closed_form, "2x2 monotone closed form (monotone sample)");

    const bool pm = is_paramonotone(a, o.tol);
    const bool sm = is_strictly_monotone(a, o.tol);
    s.check(!sm || pm, "SM implies PM");
    s.check(pm == (sm || symmetric_within(m, o.tol.abs)),
            "2x2 paramonotone iff strictly monotone or symmetric");
    s.check(is_3star(a, o.tol) == pm, "3* iff PM");
  }

  for (int t = 0; t < o.budget; ++t) {
    const MatrixOperator a = random_operator(2, rng);
    const Matrix& m = a.matrix();
    const bool closed_form =
        m(0, 0) + m(1, 1) >= 0 &&
        4 * m(0, 0) * m(1, 1) >= (m(1, 0) + m(0, 1)) * (m(1, 0) + m(0, 1));
    s.check(is_monotone(a, o.tol) == closed_form, "2x2 monotone closed form (arbitrary sample)");

    const CyclicResult c4 = is_n_cyclic(a, 4, o.tol);
    const CyclicResult c3 = is_n_cyclic(a, 3, o.tol);
    s.check(!c4.cyclic || c3.cyclic, "4-cyclic implies 3-cyclic");
    s.check(!c3.cyclic || is_monotone(a, o.tol), "3-cyclic implies monotone");
    if (c3.cyclic) {
      s.check(necessary_3cm_2x2(a), "3-cyclic implies the 2x2 necessary bound");
      s.check(is_3star(a, o.tol), "3-cyclic implies 3*");
    } else {
      s.check(c3.witness.has_value() && c3.witness->cycle_sum < 0,
              "non-cyclic verdicts carry a negative cycle");
      if (c3.witness)
        s.check(cycle_sum(a, c3.witness->points) < 0, "witness re-evaluates negative");
    }
  }

  for (int t = 0; t < std::max(o.budget / 20, 50); ++t) {
    const int d = rng.uniform_int(2, 5);
    const MatrixOperator a = random_monotone(d, rng);
    const double lambda = std::exp(rng.uniform(-3.0, 3.0));
    const MatrixOperator scaled_a(lambda * a.matrix());
    s.check(classify(a, o.tol).code == classify(scaled_a, o.tol).code,
            "class code invariant under positive scaling");
  }
  return s.take();
}

SuiteResult suite_relations(const VerifyOptions& o) {
  Suite s("relations");
  Rand rng(o.seed + 2);
  const int trials = std::max(o.budget / 10, 100);

  for (int t = 0; t < trials; ++t) {
    const int d = rng.uniform_int(2, 5);
    const LinearRelation a = random_monotone_relation(d, rng, o.tol);
    s.check(is_monotone_relation(a, o.tol), "generator yields monotone relations");

    s.check(is_subset(a.dom(), orth_complement(a.a0(), o.tol), o.tol), "dom ⊆ A0⊥");
    s.check(is_subset(a.a0(), orth_complement(a.dom(), o.tol), o.tol), "A0 ⊆ dom⊥");

    if (a.graph_dim() > 0) {
      const Vec g = a.graph().basis()[rng.uniform_int(0, a.graph_dim() - 1)];
      const Vec x(g.begin(), g.begin() + d);
      const Vec xstar(g.begin() + d, g.end());
      const ImageResult img = image_of(a, x, o.tol);
      s.check(contains(img.a0, sub(xstar, img.representative), o.tol),
              "image representative differs from a graph image by A0");
      // <y, Ax> does not depend on the representative.
      if (a.dom().dim() > 0 && img.a0.dim() > 0) {
        const Vec y = project(a.dom(), rng.gaussian_vec(d));
        const Vec other = add(img.representative, img.a0.basis()[0]);
        s.check(std::fabs(dot(y, img.representative) - dot(y, other)) <=
                    1e-7 * std::max(1.0, norm(y)),
                "inner product against the image is single-valued");
      }
    }

    const LinearRelation sel = selection(a, o.tol);
    s.check(sel.a0().dim() == 0, "selection is single-valued");
    s.check(is_monotone_relation(sel, o.tol), "selection stays monotone");
    bool inside = true;
    for (const Vec& g : sel.graph().basis()) inside = inside && contains(a.graph(), g, o.tol);
    s.check(inside, "selection graph contained in the original");

    const bool maximal = is_maximal_relation(a, o.tol);
    s.check(maximal == (a.graph_dim() == d), "maximal iff graph dimension d");
    if (maximal) {
      for (int probe = 0; probe < 20; ++probe) {
        const Vec u = rng.gaussian_vec(d);
        const Vec ustar = rng.gaussian_vec(d);
        Vec uu(u);
        uu.insert(uu.end(), ustar.begin(), ustar.end());
        if (contains(a.graph(), uu, o.tol)) continue;
        s.check(!monotonically_related(a, u, ustar, o.tol),
                "maximal relations admit no extension point");
      }
    }

    const bool pm = is_paramonotone_relation(a, o.tol);
    const bool sm = is_strict_relation(a, o.tol);
    const bool star3 = is_3star_relation(a, o.tol);
    const bool cm3 = is_n_cyclic_relation(a, 3, o.tol).cyclic;
    s.check(!sm || pm, "SM implies PM (relations)");
    s.check(!cm3 || star3, "3CM implies 3* (relations)");
    s.check(!(cm3 && maximal) || pm, "3CM and MM imply PM");
    if (star3) {
      s.check(is_paramonotone_relation(extend_by_domain_perp(a, o.tol), o.tol),
              "domain-perp extension of a 3* relation is paramonotone");
    }
  }

  for (const CatalogEntry& e : operator_catalog(o.tol)) {
    const LinearRelation rel = LinearRelation::from_operator(e.op(), o.tol);
    s.check(classify_relation(rel, o.tol).code == classify(e.op(), o.tol).code,
            "relation embedding preserves the class code: " + e.name);
  }
  return s.take();
}

SuiteResult suite_products(const VerifyOptions& o) {
  Suite s("products");
  const auto ops = operator_catalog(o.tol);
  for (const CatalogEntry& e1 : ops)
    for (const CatalogEntry& e2 : ops) {
      const ClassCode got = classify(product_op(e1.op(), e2.op()), o.tol).code;
      const ClassCode expect = class_and(classify(e1.op(), o.tol).code,
                                         classify(e2.op(), o.tol).code);
      s.check(got == expect, "operator product AND law: " + e1.name + " x " + e2.name);
    }

  const auto rels = relation_catalog(o.tol);
  for (const CatalogEntry& e1 : rels)
    for (const CatalogEntry& e2 : rels) {
      const ClassCode got =
          classify_relation(product_relation(e1.relation(), e2.relation(), o.tol), o.tol).code;
      const ClassCode expect = class_and(classify_relation(e1.relation(), o.tol).code,
                                         classify_relation(e2.relation(), o.tol).code);
      s.check(got == expect, "relation product AND law: " + e1.name + " x " + e2.name);
    }

  ClassCode expected = ClassCode::parse("10010");
  if (o.inject_fault) expected.pm = !expected.pm;
  s.check(class_and(ClassCode::parse("10111"), ClassCode::parse("11010")) == expected,
          "AND of 10111 and 11010 is 10010");
  return s.take();
}

SuiteResult suite_catalog(const VerifyOptions& o) {
  Suite s("catalog");
  for (const CatalogEntry& e : operator_catalog(o.tol))
    s.check(classify(e.op(), o.tol).code == e.expected_code,
            "operator catalog code: " + e.name);
  for (const CatalogEntry& e : relation_catalog(o.tol))
    s.check(classify_relation(e.relation(), o.tol).code == e.expected_code,
            "relation catalog code: " + e.name);

  double prev = 2.0;
  for (int n = 1; n <= 5; ++n) {
    const AlphaStar alpha = brezis_haraux_alpha(rotation_chain(n), o.tol);
    const double expect = rotation_chain_alpha(n);
    s.check(!alpha.unbounded && std::fabs(alpha.value - expect) <= 1e-6 * expect,
            "alpha* of the rotation chain matches sin(1/N^4)");
    s.check(alpha.value < prev, "alpha* of the rotation chain strictly decreases");
    prev = alpha.value;
  }
  return s.take();
}

SuiteResult suite_oracle(const VerifyOptions& o) {
  Suite s("oracle");
  for (const CatalogEntry& e : operator_catalog(o.tol)) {
    const bool cyclic = is_n_cyclic(e.op(), 3, o.tol).cyclic;
    const auto witness = sample_cycle(e.op(), 3, o.budget, o.seed, o.tol);
    s.check(witness.has_value() == !cyclic, "cycle sampling agrees with the verdict: " + e.name);
    if (witness) {
      s.check(witness->cycle_sum < 0, "sampled cycle is negative: " + e.name);
      s.check(cycle_sum(e.op(), witness->points) == witness->cycle_sum,
              "sampled cycle re-evaluates identically: " + e.name);
      const auto again = sample_cycle(e.op(), 3, o.budget, o.seed, o.tol);
      s.check(again && again->trial == witness->trial && again->cycle_sum == witness->cycle_sum,
              "cycle sampling is deterministic: " + e.name);
    }
  }

  for (const CatalogEntry& e : relation_catalog(o.tol)) {
    const bool cyclic = is_n_cyclic_relation(e.relation(), 3, o.tol).cyclic;
    const auto witness = sample_cycle(e.relation(), 3, o.budget, o.seed, o.tol);
    s.check(witness.has_value() == !cyclic,
            "relation cycle sampling agrees with the verdict: " + e.name);

    const auto ext = probe_extension(e.relation(), o.budget, o.seed, o.tol);
    const bool maximal = is_maximal_relation(e.relation(), o.tol);
    s.check(!maximal == ext.has_value(), "extension probe agrees with maximality: " + e.name);
  }

  s.check(probe_3star_growth(rotation(std::numbers::pi / 2), o.budget, o.seed, 1 << 30, o.tol)
              .has_value(),
          "growth witness for the quarter turn");
  s.check(!probe_3star_growth(coordinate_projection(2, 2), o.budget, o.seed, 1 << 30, o.tol)
               .has_value(),
          "no growth witness for the identity");
  s.check(!probe_3star_growth(star_not_pm_relation(o.tol), o.budget, o.seed, 1 << 30, o.tol)
               .has_value(),
          "no growth witness for the 3* non-paramonotone relation");
  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::pair<std::string, std::function<SuiteResult(const VerifyOptions&)>>>
      suites = {{"numerics", suite_numerics},   {"operators", suite_operators},
                {"relations", suite_relations}, {"products", suite_products},
                {"catalog", suite_catalog},     {"oracle", suite_oracle}};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites) {
    if (!options.suite.empty() && options.suite != name) continue;
    out.push_back(fn(options));
  }
  if (out.empty()) throw std::invalid_argument("run_verification: unknown suite " + options.suite);
  return out;
}

}  // namespace monoclass
