#include "doctest.h"
#include "hgx/comodule.hpp"
#include "hgx/gallery.hpp"

using namespace hgx;

namespace {
const Field Q = Field::rationals();

RelHopfModule line_over(ComodAlgPtr a, const Vec& action_of_each_basis, const Vec& coact_h) {
  // one-dimensional module: e_i acts by the scalar action_of_each_basis[i],
  // coaction m ↦ m⊗coact_h
  Field f = a->field();
  RelHopfModule m;
  m.alg = a;
  m.dim = 1;
  m.action = Matrix(f, 1, a->dim());
  for (size_t i = 0; i < a->dim(); ++i) m.action.at(0, i) = action_of_each_basis[i];
  m.coaction = Matrix::from_cols(f, {coact_h}, a->hopf()->dim());
  return m;
}
}  // namespace

TEST_CASE("check_comodule examples") {
  auto h = gallery::qc2();
  Comodule triv{h, 3, Side::Right, Matrix::identity(Q, 3).kron(Matrix::from_cols(Q, {h->unit()}, 2))};
  CHECK(check_comodule(triv).all_passed());

  auto a2 = gallery::a2();
  CHECK(check_comodule(a2->com).all_passed());
  CHECK(check_comodule_algebra(*a2).all_passed());

  Comodule bad = a2->com;
  // ρ(x) = x⊗1 + x⊗g breaks the counit: (id⊗ε)ρ(x) = 2x
  bad.coaction = Matrix(Q, 4, 2);
  bad.coaction.at(0, 0) = Scalar::one(Q);
  bad.coaction.at(2, 1) = Scalar::one(Q);
  bad.coaction.at(3, 1) = Scalar::one(Q);
  Report rep = check_comodule(bad);
  CHECK(!rep.all_passed());
  bool counit_failed = false;
  for (const auto& it : rep.items)
    if (it.name == "counit" && it.status == Status::Fail) counit_failed = true;
  CHECK(counit_failed);
}

TEST_CASE("coinvariants examples") {
  auto h = gallery::qc2();
  Comodule triv{h, 2, Side::Right, Matrix::identity(Q, 2).kron(Matrix::from_cols(Q, {h->unit()}, 2))};
  CHECK(coinvariants(triv) == Subspace::full(Q, 2));

  auto a2 = gallery::a2();
  Subspace c = coinvariants(a2->com);
  CHECK(c.dim() == 1);
  CHECK(c.basis_vector(0) == vec_unit(Q, 2, 0));  // span{1}

  for (HopfPtr hp : {gallery::qc2(), gallery::h4()}) {
    auto reg = gallery::regular_comodule_algebra(hp);
    Subspace ci = coinvariants(reg->com);
    CHECK(ci.dim() == 1);
    CHECK(ci.basis_vector(0) == hp->unit());
  }
}

TEST_CASE("cotensor examples") {
  auto h = gallery::qc2();
  auto reg = gallery::regular_comodule_algebra(h);
  // H□_H N ≅ N for N the regular left comodule
  Comodule left_reg{h, 2, Side::Left, h->coalgebra.comult};
  CHECK(check_comodule(left_reg).all_passed());
  CHECK(cotensor(reg->com, left_reg).dim() == 2);

  Comodule triv_r{h, 2, Side::Right, Matrix::identity(Q, 2).kron(Matrix::from_cols(Q, {h->unit()}, 2))};
  Comodule triv_l{h, 3, Side::Left, Matrix::from_cols(Q, {h->unit()}, 2).kron(Matrix::identity(Q, 3))};
  CHECK(cotensor(triv_r, triv_l) == Subspace::full(Q, 6));

  // A2 □ A2^op has basis {1⊗1, x⊗x}
  auto a2 = gallery::a2();
  auto a2op = op_left_comodule(*a2);
  Subspace ct = cotensor(a2->com, a2op.com);
  CHECK(ct.dim() == 2);
  CHECK(ct.contains(kron_vec(vec_unit(Q, 2, 0), vec_unit(Q, 2, 0))));
  CHECK(ct.contains(kron_vec(vec_unit(Q, 2, 1), vec_unit(Q, 2, 1))));

  CHECK_THROWS_WITH_AS(cotensor(a2->com, a2->com), doctest::Contains("SideMismatch"), Error);
}

TEST_CASE("op_left_comodule") {
  auto h = gallery::qc2();
  auto a2 = gallery::a2();
  auto b = op_left_comodule(*a2);
  CHECK(b.com.side == Side::Left);
  CHECK(check_comodule_algebra(b).all_passed());
  // λ(x) = S⁻¹(g)⊗x = g⊗x
  CHECK(b.com.coaction.col(1) == kron_vec(vec_unit(Q, 2, 1), vec_unit(Q, 2, 1)));

  auto trivial = gallery::trivial_comodule_algebra(a2->algebra, h);
  auto triv_op = op_left_comodule(*trivial);
  CHECK(check_comodule_algebra(triv_op).all_passed());
  for (size_t j = 0; j < 2; ++j)
    CHECK(triv_op.com.coaction.col(j) == kron_vec(h->unit(), vec_unit(Q, 2, j)));

  auto regh4 = gallery::regular_comodule_algebra(gallery::h4());
  CHECK(check_comodule_algebra(op_left_comodule(*regh4)).all_passed());
}

TEST_CASE("cotensor_algebra") {
  auto a2 = gallery::a2();
  auto k_alg = gallery::trivial_comodule_algebra(AlgebraPresentation::trivial(Q), gallery::qc2());

  // B = k gives A^{coH} as an algebra
  CotensorAlgebra c0 = cotensor_algebra(*a2, *k_alg);
  CHECK(c0.algebra.dim == 1);
  CHECK(check_algebra(c0.algebra).all_passed());

  CotensorAlgebra c = cotensor_algebra(*a2, *a2);
  CHECK(c.algebra.dim == 2);
  CHECK(check_algebra(c.algebra).all_passed());
  // (x⊗x)² = x²⊗(x²)ᵒᵖ = 1⊗1
  Vec xx = kron_vec(vec_unit(Q, 2, 1), vec_unit(Q, 2, 1));
  auto coords = c.space.coordinates(xx);
  REQUIRE(coords.has_value());
  Vec sq = c.algebra.mul(*coords, *coords);
  auto unit_coords = c.space.coordinates(kron_vec(vec_unit(Q, 2, 0), vec_unit(Q, 2, 0)));
  REQUIRE(unit_coords.has_value());
  CHECK(sq == *unit_coords);

  auto reg = gallery::regular_comodule_algebra(gallery::qc2());
  CotensorAlgebra cr = cotensor_algebra(*reg, *reg);
  CHECK(cr.algebra.dim == reg->dim());
}

TEST_CASE("rational_hom: A2 endomorphisms of the regular module") {
  auto a2 = gallery::a2();
  auto m = regular_rel_hopf_module(a2);
  CHECK(check_rel_hopf_module(m).all_passed());
  RationalHom rh = rational_hom(a2, m, m);
  CHECK(rh.dim() == 2);  // _A Hom(A,A) ≅ A
  CHECK(rational_hom_coaction_formula_holds(rh));
  Comodule hom_com{a2->hopf(), rh.dim(), Side::Right, rh.coaction};
  CHECK(check_comodule(hom_com).all_passed());

  // the coaction matches ρ_A under f ↦ f(1)
  Field f = Q;
  Matrix ev1(f, 2, rh.dim());
  for (size_t k = 0; k < rh.dim(); ++k) ev1.set_col(k, rh.basis[k].apply(a2->algebra.unit));
  CHECK(ev1.rank() == 2);
  Matrix lhs = Matrix::identity(f, 0);
  // (ev1⊗id)∘ρ_Hom = ρ_A∘ev1
  Matrix left = Matrix(f, 4, rh.dim());
  for (size_t k = 0; k < rh.dim(); ++k)
    left.set_col(k, apply_kron(ev1, Matrix::identity(f, 2), rh.coaction.col(k)));
  CHECK(left == a2->com.coaction * ev1);
}

TEST_CASE("rational_hom: all linear maps over the trivial algebra") {
  for (HopfPtr hp : {gallery::qc2(), gallery::h4()}) {
    auto k_alg = gallery::trivial_comodule_algebra(AlgebraPresentation::trivial(hp->field()), hp);
    auto m = RelHopfModule{k_alg, hp->dim(), Matrix::identity(hp->field(), hp->dim()),
                           hp->coalgebra.comult};
    CHECK(check_rel_hopf_module(m).all_passed());
    RationalHom rh = rational_hom(k_alg, m, m);
    CHECK(rh.dim() == hp->dim() * hp->dim());
    CHECK(rational_hom_coaction_formula_holds(rh));
    Comodule hom_com{hp, rh.dim(), Side::Right, rh.coaction};
    CHECK(check_comodule(hom_com).all_passed());
  }
}

TEST_CASE("rational_hom: zero module") {
  auto a2 = gallery::a2();
  RelHopfModule z{a2, 0, Matrix(Q, 0, 0), Matrix(Q, 0, 0)};
  RationalHom rh = rational_hom(a2, z, z);
  CHECK(rh.dim() == 0);
}

TEST_CASE("rational_hom rejects non-modules") {
  auto a2 = gallery::a2();
  // "action" where even the unit acts as zero
  RelHopfModule bad = line_over(a2, vec_zero(Q, 2), a2->hopf()->unit());
  CHECK_THROWS_WITH_AS(rational_hom(a2, bad, bad), doctest::Contains("NotRelativeHopfModule"), Error);
}

TEST_CASE("dual basis: free modules and a non-projective control") {
  auto a2 = gallery::a2();
  auto m1 = regular_rel_hopf_module(a2);
  auto db1 = find_dual_basis(*a2, m1);
  REQUIRE(db1.has_value());
  RationalHom rh1 = rational_hom(a2, m1, m1);
  CHECK(rational_hom_dual_basis(rh1, *db1) == rh1.coaction);

  auto m2 = direct_sum(m1, 2);
  CHECK(check_rel_hopf_module(m2).all_passed());
  auto db2 = find_dual_basis(*a2, m2);
  REQUIRE(db2.has_value());
  RationalHom rh2 = rational_hom(a2, m2, m2);
  CHECK(rational_hom_dual_basis(rh2, *db2) == rh2.coaction);

  // over A2' = Q[x]/(x²), the line with x acting as 0 is not projective
  auto a2p = gallery::a2_prime();
  Vec act = vec_zero(Q, 2);
  act[0] = Scalar::one(Q);
  RelHopfModule line = line_over(a2p, act, a2p->hopf()->unit());
  CHECK(check_rel_hopf_module(line).all_passed());
  CHECK(!find_dual_basis(*a2p, line).has_value());
}

TEST_CASE("END^op comodule algebras") {
  auto a2 = gallery::a2();
  auto m = regular_rel_hopf_module(a2);
  EndOpAlgebra e = end_op_comodule_algebra(a2, m);
  CHECK(e.alg.dim() == 2);
  CHECK(check_comodule_algebra(e.alg).all_passed());
  // ≅ A2 as a comodule algebra via f ↦ f(1)
  Matrix ev1(Q, 2, 2);
  for (size_t k = 0; k < 2; ++k) ev1.set_col(k, e.hom.basis[k].apply(a2->algebra.unit));
  CHECK(ev1.rank() == 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      Vec lhs = ev1.apply(e.alg.algebra.mul_basis(i, j));
      Vec rhs = a2->algebra.mul(ev1.col(i), ev1.col(j));
      CHECK(lhs == rhs);
    }

  EndOpAlgebra e2 = end_op_comodule_algebra(a2, direct_sum(m, 2));
  CHECK(e2.alg.dim() == 8);
  CHECK(check_comodule_algebra(e2.alg).all_passed());

  auto h = gallery::qc2();
  auto k_alg = gallery::trivial_comodule_algebra(AlgebraPresentation::trivial(Q), h);
  RelHopfModule hm{k_alg, 2, Matrix::identity(Q, 2), h->coalgebra.comult};
  EndOpAlgebra eh = end_op_comodule_algebra(k_alg, hm);
  CHECK(eh.alg.dim() == 4);
  CHECK(check_comodule_algebra(eh.alg).all_passed());
}

TEST_CASE("Eq 3.6.1 composition compatibility on END bases") {
  auto a2 = gallery::a2();
  auto m = direct_sum(regular_rel_hopf_module(a2), 2);
  EndOpAlgebra e = end_op_comodule_algebra(a2, m);
  const auto& h = *a2->hopf();
  size_t k = e.hom.dim(), dh = h.dim();
  // ρ(g∘f) = g₍₀₎∘f₍₀₎ ⊗ f₍₁₎g₍₁₎ for all pairs of basis endomorphisms
  for (size_t fi = 0; fi < k; ++fi)
    for (size_t gi = 0; gi < k; ++gi) {
      Vec lhs = e.hom.coaction.apply(e.hom.coordinates(e.hom.basis[gi] * e.hom.basis[fi]));
      Vec rf = e.hom.coaction.col(fi), rg = e.hom.coaction.col(gi);
      Vec rhs = vec_zero(Q, k * dh);
      for (size_t au = 0; au < rf.size(); ++au) {
        if (rf[au].is_zero()) continue;
        for (size_t bv = 0; bv < rg.size(); ++bv) {
          if (rg[bv].is_zero()) continue;
          Vec comp = e.hom.coordinates(e.hom.basis[bv / dh] * e.hom.basis[au / dh]);
          vec_axpy(rhs, rf[au] * rg[bv],
                   kron_vec(comp, h.mul_basis_pair(au % dh, bv % dh)));
        }
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("counit property of the hom coaction") {
  auto a2 = gallery::a2();
  auto m = regular_rel_hopf_module(a2);
  auto n = direct_sum(m, 2);
  RationalHom rh = rational_hom(a2, m, n);
  const auto& h = *a2->hopf();
  // ε(f₍₁₎)f₍₀₎ = f
  for (size_t k = 0; k < rh.dim(); ++k) {
    Vec rho_f = rh.coaction.col(k);
    Vec back = apply_kron(Matrix::identity(Q, rh.dim()), h.coalgebra.counit, rho_f);
    CHECK(back == vec_unit(Q, rh.dim(), k));
  }
}
