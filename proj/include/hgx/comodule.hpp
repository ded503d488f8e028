#pragma once

#include "hgx/hopf.hpp"

namespace hgx {

enum class Side { Right, Left };

/// H-comodule by an explicit coaction matrix: M → M⊗H when side is Right,
/// M → H⊗M when side is Left.
struct Comodule {
  HopfPtr hopf;
  size_t dim = 0;
  Side side = Side::Right;
  Matrix coaction;

  Vec coact(const Vec& m) const { return coaction.apply(m); }
};

Report check_comodule(const Comodule& c);

/// {m : ρ(m) = m⊗1} (resp. λ(m) = 1⊗m), canonical.
Subspace coinvariants(const Comodule& c);

/// M□_H N = ker(ρ⊗id − id⊗λ) inside M⊗N; m must be right, n left, same H.
Subspace cotensor(const Comodule& m, const Comodule& n);

/// Algebra + comodule on the same space, with the coaction an algebra map.
struct ComoduleAlgebra {
  AlgebraPresentation algebra;
  Comodule com;

  const Field& field() const { return algebra.field; }
  size_t dim() const { return algebra.dim; }
  const HopfPtr& hopf() const { return com.hopf; }
};

using ComodAlgPtr = std::shared_ptr<const ComoduleAlgebra>;

Report check_comodule_algebra(const ComoduleAlgebra& a);

/// Bᵒᵖ as a left H-comodule algebra, λ(b) = S⁻¹(b₍₁₎)⊗b₍₀₎.
ComoduleAlgebra op_left_comodule(const ComoduleAlgebra& b);

/// Product of u, v ∈ A⊗B from the two structure-constant tables.
Vec mul_tensor(const AlgebraPresentation& a, const AlgebraPresentation& b, const Vec& u, const Vec& v);

/// A□_H B as a subalgebra of A⊗B (A right, b_left left, same H).
struct CotensorAlgebra {
  AlgebraPresentation algebra;  // presentation on the cotensor basis
  Subspace space;               // inside A⊗B
  Matrix embedding;             // (dimA·dimB) x dim
  AlgebraPresentation ambient;  // A⊗B as an algebra
};

CotensorAlgebra cotensor_algebra_left(const ComoduleAlgebra& a, const ComoduleAlgebra& b_left);
/// Spec surface: both arguments right comodule algebras; the second is
/// replaced by its opposite with the induced left coaction.
CotensorAlgebra cotensor_algebra(const ComoduleAlgebra& a, const ComoduleAlgebra& b_right);

/// Object of the relative Hopf module category: left A-module with a
/// compatible right H-coaction, ρ(am) = a₍₀₎m₍₀₎⊗a₍₁₎m₍₁₎.
struct RelHopfModule {
  ComodAlgPtr alg;
  size_t dim = 0;
  Matrix action;    // dim x (dimA·dim)
  Matrix coaction;  // (dim·dimH) x dim

  Vec act(const Vec& a, const Vec& m) const { return action.apply(kron_vec(a, m)); }
  Comodule as_comodule() const { return Comodule{alg->hopf(), dim, Side::Right, coaction}; }
};

Report check_rel_hopf_module(const RelHopfModule& m);

/// The regular object A ∈ _A M^H.
RelHopfModule regular_rel_hopf_module(ComodAlgPtr a);
/// Direct sum of n copies of m.
RelHopfModule direct_sum(const RelHopfModule& m, size_t copies);

/// _A HOM(M,N) with the coaction solved from
/// f₍₀₎(m)⊗f₍₁₎ = f(m₍₀₎)₍₀₎⊗S⁻¹(m₍₁₎)f(m₍₀₎)₍₁₎ through the injection
/// ν(f⊗h)(m) = f(m)⊗h. A failed solve is a hard error.
struct RationalHom {
  ComodAlgPtr alg;
  size_t source_dim = 0, target_dim = 0;
  std::vector<Matrix> basis;  // A-linear maps, canonical order
  Subspace hom_space;         // flattened row-major in k^(dN·dM)
  Matrix coaction;            // (k·dimH) x k
  Matrix source_coaction, target_coaction;
  Matrix source_action, target_action;

  size_t dim() const { return basis.size(); }
  /// Coordinates of an A-linear map in this basis.
  Vec coordinates(const Matrix& f) const;
  Matrix from_coordinates(const Vec& c) const;
};

RationalHom rational_hom(ComodAlgPtr a, const RelHopfModule& m, const RelHopfModule& n);

/// Re-evaluates Eq. f₍₀₎(m)⊗f₍₁₎ = f(m₍₀₎)₍₀₎⊗S⁻¹(m₍₁₎)f(m₍₀₎)₍₁₎ entrywise.
bool rational_hom_coaction_formula_holds(const RationalHom& rh);

/// Dual basis {mᵢ*} for the module basis generators: Σ mᵢ*(m)·mᵢ = m.
struct DualBasis {
  std::vector<Matrix> functionals;  // each dimA x dimM, left A-linear
};

/// Solves the dual-basis system; nullopt when M is not projective.
std::optional<DualBasis> find_dual_basis(const ComoduleAlgebra& a, const RelHopfModule& m);

/// Coaction via the finite-dual-basis formula; must agree with rational_hom.
Matrix rational_hom_dual_basis(const RationalHom& rh, const DualBasis& db);

/// _A END(M)ᵒᵖ as a right H-comodule algebra (product = opposite composition).
struct EndOpAlgebra {
  ComoduleAlgebra alg;
  RationalHom hom;  // basis shared with alg's presentation
};

EndOpAlgebra end_op_comodule_algebra(ComodAlgPtr a, const RelHopfModule& m);

bool same_hopf(const HopfAlgebraPresentation& a, const HopfAlgebraPresentation& b);

}  // namespace hgx
