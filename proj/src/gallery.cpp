#include "hgx/gallery.hpp"

namespace hgx::gallery {

namespace {
const Field Q = Field::rationals();
}

HopfPtr trivial_hopf(Field f) {
  return std::make_shared<HopfAlgebraPresentation>(group_algebra(cyclic_group_table(1), f));
}

HopfPtr qc2() {
  return std::make_shared<HopfAlgebraPresentation>(group_algebra(cyclic_group_table(2), Q));
}

HopfPtr qc4() {
  return std::make_shared<HopfAlgebraPresentation>(group_algebra(cyclic_group_table(4), Q));
}

HopfPtr qc2_dual() {
  return std::make_shared<HopfAlgebraPresentation>(dual_group_algebra(cyclic_group_table(2), Q));
}

HopfPtr h4() { return std::make_shared<HopfAlgebraPresentation>(sweedler_h4(Q)); }

HopfPtr h4_gf5() { return std::make_shared<HopfAlgebraPresentation>(sweedler_h4(Field::prime(5))); }

ComoduleAlgebra graded_line_algebra(HopfPtr cyclic, size_t n, long c) {
  Field f = cyclic->field();
  if (cyclic->dim() != n) throw Error("DimensionMismatch", "graded_line_algebra group size");
  ComoduleAlgebra a;
  a.algebra.field = f;
  a.algebra.dim = n;
  for (size_t i = 0; i < n; ++i)
    a.algebra.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  a.algebra.mult = Matrix(f, n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t k = i + j;
      if (k < n)
        a.algebra.mult.at(k, i * n + j) = Scalar::one(f);
      else
        a.algebra.mult.at(k - n, i * n + j) = Scalar(f, c);
    }
  a.algebra.unit = vec_unit(f, n, 0);
  a.com.hopf = cyclic;
  a.com.dim = n;
  a.com.side = Side::Right;
  a.com.coaction = Matrix(f, n * n, n);
  for (size_t i = 0; i < n; ++i) a.com.coaction.at(i * n + i, i) = Scalar::one(f);  // x^i ⊗ g^i
  return a;
}

ComodAlgPtr a2() { return std::make_shared<ComoduleAlgebra>(graded_line_algebra(qc2(), 2, 1)); }

ComodAlgPtr a2_prime() { return std::make_shared<ComoduleAlgebra>(graded_line_algebra(qc2(), 2, 0)); }

ComodAlgPtr a4() { return std::make_shared<ComoduleAlgebra>(graded_line_algebra(qc4(), 4, 1)); }

ComodAlgPtr regular_comodule_algebra(HopfPtr h) {
  ComoduleAlgebra a;
  a.algebra = h->algebra;
  a.com.hopf = h;
  a.com.dim = h->dim();
  a.com.side = Side::Right;
  a.com.coaction = h->coalgebra.comult;
  return std::make_shared<ComoduleAlgebra>(a);
}

ComodAlgPtr trivial_comodule_algebra(const AlgebraPresentation& alg, HopfPtr h) {
  ComoduleAlgebra a;
  a.algebra = alg;
  a.com.hopf = h;
  a.com.dim = alg.dim;
  a.com.side = Side::Right;
  a.com.coaction =
      Matrix::identity(alg.field, alg.dim).kron(Matrix::from_cols(alg.field, {h->unit()}, h->dim()));
  return std::make_shared<ComoduleAlgebra>(a);
}

}  // namespace hgx::gallery
