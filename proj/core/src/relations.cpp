#include "monoclass/relations.hpp"

#include <cmath>
#include <stdexcept>

namespace monoclass {

namespace {

Vec stack(const Vec& x, const Vec& y) {
  Vec v(x);
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

void require_monotone(const LinearRelation& a, const Tolerance& tol, const char* who) {
  if (!is_monotone_relation(a, tol))
    throw std::invalid_argument(std::string(who) + ": relation must be monotone");
}

}  // namespace

LinearRelation::LinearRelation(int dim, Subspace graph, const Tolerance& tol)
    : dim_(dim), graph_(std::move(graph)) {
  const int k = graph_.dim();
  x_ = Matrix(dim_, std::max(k, 1));
  y_ = Matrix(dim_, std::max(k, 1));
  for (int j = 0; j < k; ++j) {
    const Vec& g = graph_.basis()[j];
    for (int i = 0; i < dim_; ++i) {
      x_(i, j) = g[i];
      y_(i, j) = g[dim_ + i];
    }
  }
  // A trivial graph keeps 1-column zero parts so no zero-width matrices
  // appear; its form is the 1x1 zero.
  form_ = (x_.transpose() * y_).symmetrized();

  std::vector<Vec> xcols, ycols;
  for (int j = 0; j < k; ++j) {
    xcols.push_back(x_.column(j));
    ycols.push_back(y_.column(j));
  }
  dom_ = span_of(dim_, xcols, tol);
  ran_ = span_of(dim_, ycols, tol);

  // a0 = images of coefficients with vanishing x-part; ker mirrors it.
  std::vector<Vec> a0_vecs, ker_vecs;
  if (k > 0) {
    const Subspace x_null = kernel_basis(x_, tol);
    const Subspace y_null = kernel_basis(y_, tol);
    for (const Vec& c : x_null.basis()) a0_vecs.push_back(y_.apply(c));
    for (const Vec& c : y_null.basis()) ker_vecs.push_back(x_.apply(c));
  }
  a0_ = span_of(dim_, a0_vecs, tol);
  ker_ = span_of(dim_, ker_vecs, tol);
}

LinearRelation LinearRelation::from_graph_vectors(int dim, const std::vector<Vec>& vectors,
                                                  const Tolerance& tol) {
  if (dim < 1) throw std::invalid_argument("LinearRelation: dimension must be positive");
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != 2 * dim)
      throw std::invalid_argument("LinearRelation: graph vectors must have length 2*dim");
  return LinearRelation(dim, span_of(2 * dim, vectors, tol), tol);
}

LinearRelation LinearRelation::from_operator(const MatrixOperator& a, const Tolerance& tol) {
  const int d = a.dim();
  std::vector<Vec> vecs;
  for (int j = 0; j < d; ++j) {
    Vec e(d, 0.0);
    e[j] = 1.0;
    vecs.push_back(stack(e, a.matrix().apply(e)));
  }
  return from_graph_vectors(d, vecs, tol);
}

std::pair<Vec, Vec> LinearRelation::point(const Vec& coeff) const {
  return {x_.apply(coeff), y_.apply(coeff)};
}

ImageResult image_of(const LinearRelation& a, const Vec& x, const Tolerance& tol) {
  if (static_cast<int>(x.size()) != a.dim())
    throw std::invalid_argument("image_of: vector length does not match dimension");
  if (!contains(a.dom(), x, tol)) throw std::domain_error("image_of: x is not in dom A");

  // Least squares Xc = x through the graph basis: coefficients of one graph
  // point above x, then project its image onto A0⊥.
  const int k = a.graph_dim();
  Vec coeff(std::max(k, 1), 0.0);
  if (k > 0) {
    // Xᵀ(Xc − x) = 0 via eigen-decomposition of XᵀX (k ≤ 2d, dense, small).
    const Matrix xtx = (a.x_part().transpose() * a.x_part()).symmetrized();
    const Vec rhs = a.x_part().transpose().apply(x);
    const EigenSym eig = sym_eigen(xtx, tol);
    const double thr = zero_threshold(tol, xtx.max_abs());
    for (int i = 0; i < k; ++i) {
      if (std::fabs(eig.values[i]) <= thr) continue;
      const Vec vi = eig.vectors.column(i);
      const double ci = dot(vi, rhs) / eig.values[i];
      for (int j = 0; j < k; ++j) coeff[j] += ci * vi[j];
    }
  }
  Vec xstar = a.y_part().apply(coeff);
  ImageResult r{sub(xstar, project(a.a0(), xstar)), a.a0()};
  return r;
}

bool is_monotone_relation(const LinearRelation& a, const Tolerance& tol) {
  return is_psd(a.monotone_form(), tol).psd;
}

bool is_strict_relation(const LinearRelation& a, const Tolerance& tol) {
  require_monotone(a, tol, "is_strict_relation");
  const Subspace ker_form = kernel_basis(a.monotone_form(), tol);
  for (const Vec& c : ker_form.basis())
    if (norm(a.x_part().apply(c)) > tol.abs) return false;
  return true;
}

bool is_paramonotone_relation(const LinearRelation& a, const Tolerance& tol) {
  require_monotone(a, tol, "is_paramonotone_relation");
  const Subspace ker_form = kernel_basis(a.monotone_form(), tol);
  for (const Vec& c : ker_form.basis()) {
    const Vec y = a.x_part().apply(c);
    if (!contains(a.graph(), stack(y, Vec(a.dim(), 0.0)), tol)) return false;
  }
  return true;
}

bool is_3star_relation(const LinearRelation& a, const Tolerance& tol) {
  require_monotone(a, tol, "is_3star_relation");
  const Subspace dom_perp = orth_complement(a.dom(), tol);
  const Subspace ran_perp = orth_complement(a.ran(), tol);
  const Subspace ker_form = kernel_basis(a.monotone_form(), tol);
  for (const Vec& c : ker_form.basis()) {
    if (!contains(dom_perp, a.y_part().apply(c), tol)) return false;
    if (!contains(ran_perp, a.x_part().apply(c), tol)) return false;
  }
  return true;
}

double relation_cycle_sum(const std::vector<Vec>& graph_points) {
  const int n = static_cast<int>(graph_points.size());
  if (n < 2) throw std::invalid_argument("relation_cycle_sum: need at least two points");
  const int d = static_cast<int>(graph_points.front().size()) / 2;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec& p = graph_points[i];
    const Vec& q = graph_points[(i + 1) % n];
    for (int j = 0; j < d; ++j) s += (p[j] - q[j]) * p[d + j];
  }
  return s;
}

CyclicResult is_n_cyclic_relation(const LinearRelation& a, int n, const Tolerance& tol) {
  if (n < 2) throw std::invalid_argument("is_n_cyclic_relation: n must be >= 2");
  const int k = std::max(a.graph_dim(), 1);
  const Matrix d = a.x_part().transpose() * a.y_part();
  const Matrix dsym = d.symmetrized();
  const Matrix half = 0.5 * d;
  const Matrix half_t = half.transpose();
  Matrix gram(n * k, n * k);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    gram.add_block(i * k, i * k, dsym);
    gram.add_block(j * k, i * k, half, -1.0);
    gram.add_block(i * k, j * k, half_t, -1.0);
  }
  const PsdResult psd = is_psd(gram, tol);
  if (psd.psd) return {true, std::nullopt};

  CycleWitness w;
  for (int i = 0; i < n; ++i) {
    const Vec c(psd.witness.begin() + i * k, psd.witness.begin() + (i + 1) * k);
    auto [y, ystar] = a.point(c);
    w.points.push_back(stack(y, ystar));
  }
  w.cycle_sum = relation_cycle_sum(w.points);
  return {false, std::move(w)};
}

bool monotonically_related(const LinearRelation& a, const Vec& u, const Vec& ustar,
                           const Tolerance& tol) {
  require_monotone(a, tol, "monotonically_related");
  if (static_cast<int>(u.size()) != a.dim() || static_cast<int>(ustar.size()) != a.dim())
    throw std::invalid_argument("monotonically_related: vector length does not match dimension");

  // inf over coefficients c of <u − Xc, u* − Yc> = <u,u*> − bᵀc + cᵀBc.
  const Matrix& b_form = a.monotone_form();
  Vec b = add(a.x_part().transpose().apply(ustar), a.y_part().transpose().apply(u));

  const EigenSym eig = sym_eigen(b_form, tol);
  const double thr = zero_threshold(tol, b_form.max_abs());
  const int k = b_form.rows();

  // Unbounded below unless b ⊥ ker B.
  double ker_component_sq = 0.0;
  double quad = 0.0;  // ¼ bᵀB⁺b
  for (int i = 0; i < k; ++i) {
    const double bi = dot(eig.vectors.column(i), b);
    if (std::fabs(eig.values[i]) <= thr)
      ker_component_sq += bi * bi;
    else
      quad += 0.25 * bi * bi / eig.values[i];
  }
  if (std::sqrt(ker_component_sq) > tol.abs * std::max(1.0, norm(b))) return false;

  const double minimum = dot(u, ustar) - quad;
  return minimum >= -tol.abs * std::max(1.0, norm(u) * norm(ustar));
}

bool is_maximal_relation(const LinearRelation& a, const Tolerance& tol) {
  if (!is_monotone_relation(a, tol)) return false;
  if (a.graph_dim() != a.dim()) return false;
  // Necessary identities for a maximal monotone linear relation.
  const Subspace dom_perp = orth_complement(a.dom(), tol);
  if (!is_subset(dom_perp, a.a0(), tol) || !is_subset(a.a0(), dom_perp, tol))
    throw std::logic_error("is_maximal_relation: dom⊥ = A0 identity failed");
  return true;
}

LinearRelation selection(const LinearRelation& a, const Subspace& v, const Tolerance& tol) {
  if (v.ambient_dim() != a.dim())
    throw std::invalid_argument("selection: subspace ambient dimension mismatch");
  if (!is_subset(a.dom(), v, tol))
    throw std::invalid_argument("selection: requires dom A ⊆ V");
  if (!is_subset(a.a0(), orth_complement(v, tol), tol))
    throw std::invalid_argument("selection: requires A0 ⊆ V⊥");
  std::vector<Vec> vecs;
  for (int j = 0; j < a.graph_dim(); ++j) {
    const Vec x = a.x_part().column(j);
    const Vec y = a.y_part().column(j);
    vecs.push_back(stack(x, project(v, y)));
  }
  return LinearRelation::from_graph_vectors(a.dim(), vecs, tol);
}

LinearRelation selection(const LinearRelation& a, const Tolerance& tol) {
  return selection(a, orth_complement(a.a0(), tol), tol);
}

LinearRelation extend_by_domain_perp(const LinearRelation& a, const Tolerance& tol) {
  std::vector<Vec> vecs;
  for (const Vec& g : a.graph().basis()) vecs.push_back(g);
  const Subspace dom_perp = orth_complement(a.dom(), tol);
  for (const Vec& w : dom_perp.basis()) vecs.push_back(stack(Vec(a.dim(), 0.0), w));
  return LinearRelation::from_graph_vectors(a.dim(), vecs, tol);
}

ClassificationReport classify_relation(const LinearRelation& a, const Tolerance& tol) {
  ClassificationReport r;
  r.dim = a.dim();
  r.lambda_min_sym = min_eig_sym(a.monotone_form(), tol);
  r.ker_sym = kernel_basis(a.monotone_form(), tol);
  r.ker_full = a.ker();
  r.monotone = is_monotone_relation(a, tol);

  const CyclicResult c3 = is_n_cyclic_relation(a, 3, tol);
  if (!c3.cyclic) r.cycle_witness = c3.witness;

  if (!r.monotone) {
    r.notes.push_back("not monotone: all five classes fail");
    return r;
  }

  r.code.sm = is_strict_relation(a, tol);
  r.code.pm = is_paramonotone_relation(a, tol);
  r.code.cm3 = c3.cyclic;
  r.code.mm = is_maximal_relation(a, tol);
  r.code.star3 = is_3star_relation(a, tol);
  return r;
}

}  // namespace monoclass
