#pragma once

#include "hgx/comodule.hpp"

namespace hgx::gallery {

HopfPtr trivial_hopf(Field f);
HopfPtr qc2();
HopfPtr qc4();
HopfPtr qc2_dual();
HopfPtr h4();
HopfPtr h4_gf5();

/// k[x]/(x^n − c) graded by the cyclic group C_n, deg x = g.
/// Galois over k exactly when c is invertible (so c = 0 gives the
/// non-Galois control); the Hopf algebra is the group algebra of C_n.
ComoduleAlgebra graded_line_algebra(HopfPtr cyclic, size_t n, long c);

ComodAlgPtr a2();        // Q[x]/(x²−1) over QC2, Galois
ComodAlgPtr a2_prime();  // Q[x]/(x²) over QC2, not Galois
ComodAlgPtr a4();        // Q[x]/(x⁴−1) over QC4, Galois

/// H itself with the regular coaction Δ.
ComodAlgPtr regular_comodule_algebra(HopfPtr h);
/// A with the trivial coaction a ↦ a⊗1.
ComodAlgPtr trivial_comodule_algebra(const AlgebraPresentation& a, HopfPtr h);

}  // namespace hgx::gallery
