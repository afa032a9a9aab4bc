#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"

namespace qtrans {

/// The dual Hopf *-algebra H* in the dual basis (f_i(e_j) = delta_ij):
/// multiplication and comultiplication swap roles, unit and counit swap,
/// the antipode is transposed, and f^*(x) = conj(f(S(x)^*)).
///
/// Throws AxiomFailure if h does not pass verify_axioms(). Basis names get a
/// trailing '^'. The double dual is entrywise equal to h.
HopfPtr dual_hopf(const FiniteHopfStar& h, double tol = kDefaultTolerance);

/// The dual structure without validating the input.
FiniteHopfStar dual_structure(const FiniteHopfStar& h);

}  // namespace qtrans
