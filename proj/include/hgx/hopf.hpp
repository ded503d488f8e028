#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hgx/report.hpp"
#include "hgx/subspace.hpp"

namespace hgx {

/// Finite-dimensional unital algebra by structure constants.
/// mult is the multiplication as a linear map A⊗A → A (dim x dim²); the
/// column i·dim+j holds the coordinates of e_i·e_j.
struct AlgebraPresentation {
  Field field;
  size_t dim = 0;
  std::vector<std::string> basis_names;
  Matrix mult;
  Vec unit;

  Vec mul(const Vec& u, const Vec& v) const;
  Vec mul_basis(size_t i, size_t j) const { return mult.col(i * dim + j); }
  Matrix left_mult(const Vec& u) const;   // v ↦ u·v
  Matrix right_mult(const Vec& u) const;  // v ↦ v·u

  AlgebraPresentation opposite() const;
  static AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);
  static AlgebraPresentation trivial(Field f);  // k itself

  /// Presentation induced on a multiplicatively closed subspace containing 1.
  /// Throws NotClosed / NotUnital when the hypotheses fail.
  static AlgebraPresentation on_subspace(const AlgebraPresentation& a, const Subspace& s,
                                         const std::string& name_prefix);
};

Report check_algebra(const AlgebraPresentation& a);

/// Coalgebra by structure constants: comult is C → C⊗C (dim² x dim),
/// counit is C → k (1 x dim).
struct CoalgebraPresentation {
  Field field;
  size_t dim = 0;
  Matrix comult;
  Matrix counit;

  CoalgebraPresentation coopposite() const;
};

Report check_coalgebra(const CoalgebraPresentation& c);

/// Hopf algebra: bialgebra + antipode with inverse.
struct HopfAlgebraPresentation {
  AlgebraPresentation algebra;
  CoalgebraPresentation coalgebra;
  Matrix antipode;
  Matrix antipode_inverse;

  const Field& field() const { return algebra.field; }
  size_t dim() const { return algebra.dim; }
  Vec mul(const Vec& u, const Vec& v) const { return algebra.mul(u, v); }
  Vec mul_basis_pair(size_t i, size_t j) const { return algebra.mul_basis(i, j); }
  const Vec& unit() const { return algebra.unit; }
  Vec comul(const Vec& v) const { return coalgebra.comult.apply(v); }
  Scalar counit(const Vec& v) const { return coalgebra.counit.apply(v)[0]; }
};

using HopfPtr = std::shared_ptr<const HopfAlgebraPresentation>;

Report check_hopf(const HopfAlgebraPresentation& h);

/// kG for a group given by its Cayley table (table[i][j] = index of g_i g_j).
/// Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹. Throws NotAGroup.
HopfAlgebraPresentation group_algebra(const std::vector<std::vector<size_t>>& cayley, Field f);

/// (kG)* with the idempotent basis {p_g}: pointwise product,
/// Δ(p_g) = Σ_{xy=g} p_x⊗p_y, S(p_g) = p_{g⁻¹}.
HopfAlgebraPresentation dual_group_algebra(const std::vector<std::vector<size_t>>& cayley, Field f);

/// Cayley tables for the cyclic group of order n.
std::vector<std::vector<size_t>> cyclic_group_table(size_t n);

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}; requires
/// characteristic ≠ 2 (BadCharacteristic otherwise). The antipode has order 4.
HopfAlgebraPresentation sweedler_h4(Field f);

/// Same algebra, opposite comultiplication, antipode S⁻¹.
HopfAlgebraPresentation cop(const HopfAlgebraPresentation& h);

/// Tensor product Hopf algebra (componentwise product, comultiplication with
/// the middle twist, S = S₁⊗S₂). Throws FieldMismatch.
HopfAlgebraPresentation tensor_hopf(const HopfAlgebraPresentation& h1, const HopfAlgebraPresentation& h2);

/// Left module coalgebra: a coalgebra C with an action H⊗C → C of a Hopf
/// algebra such that the action map is a coalgebra map.
struct ModuleCoalgebra {
  HopfPtr acting_hopf;
  CoalgebraPresentation coalgebra;
  Matrix action;  // dim_C x (dim_H · dim_C)

  Vec act(const Vec& u, const Vec& c) const { return action.apply(kron_vec(u, c)); }
};

Report check_module_coalgebra(const ModuleCoalgebra& mc);

/// H as a left H⊗H^cop-module coalgebra via (k⊗l)·h = k h S(l).
ModuleCoalgebra mixing_action(const HopfAlgebraPresentation& h);

/// Builds (H⊗H^cop)⊗_H k as a quotient, the mutually inverse maps
/// f((h⊗h')⊗1) = hS(h') and g(h) = (h⊗1)⊗1, and checks that f is an
/// isomorphism of H⊗H^cop-module coalgebras.
Report verify_prop_2_0(const HopfAlgebraPresentation& h);

/// A Hopf subalgebra cut out of H: closure under mult, Δ, S verified.
struct HopfSubalgebra {
  HopfPtr ambient;
  Subspace space;                  // inside H
  HopfAlgebraPresentation as_hopf; // presentation on the subspace basis
};

/// Throws NotHopfSubalgebra naming the failed closure.
HopfSubalgebra hopf_subalgebra(HopfPtr h, const Subspace& k_basis);

/// H/HK⁺ as a left H-module coalgebra, with the projection recorded.
struct QuotientModuleCoalgebra {
  ModuleCoalgebra mc;     // acting Hopf algebra is H itself
  QuotientSpace quotient; // of H by HK⁺
  Subspace hkplus;
  bool hkplus_s_stable = false;  // observed, not required
};

QuotientModuleCoalgebra quotient_module_coalgebra(HopfPtr h, const Subspace& k_basis);

}  // namespace hgx
