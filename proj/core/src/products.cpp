#include "monoclass/products.hpp"

namespace monoclass {

MatrixOperator product_op(const MatrixOperator& a, const MatrixOperator& b) {
  const int da = a.dim();
  const int db = b.dim();
  Matrix m(da + db, da + db);
  m.add_block(0, 0, a.matrix());
  m.add_block(da, da, b.matrix());
  return MatrixOperator(std::move(m));
}

LinearRelation product_relation(const LinearRelation& a, const LinearRelation& b,
                                const Tolerance& tol) {
  const int da = a.dim();
  const int db = b.dim();
  const int d = da + db;
  std::vector<Vec> vecs;
  for (const Vec& g : a.graph().basis()) {
    Vec v(2 * d, 0.0);
    for (int i = 0; i < da; ++i) {
      v[i] = g[i];
      v[d + i] = g[da + i];
    }
    vecs.push_back(std::move(v));
  }
  for (const Vec& g : b.graph().basis()) {
    Vec v(2 * d, 0.0);
    for (int i = 0; i < db; ++i) {
      v[da + i] = g[i];
      v[d + da + i] = g[db + i];
    }
    vecs.push_back(std::move(v));
  }
  return LinearRelation::from_graph_vectors(d, vecs, tol);
}

ClassCode class_and(const ClassCode& c1, const ClassCode& c2) {
  ClassCode c;
  c.pm = c1.pm && c2.pm;
  c.sm = c1.sm && c2.sm;
  c.cm3 = c1.cm3 && c2.cm3;
  c.mm = c1.mm && c2.mm;
  c.star3 = c1.star3 && c2.star3;
  return c;
}

}  // namespace monoclass
