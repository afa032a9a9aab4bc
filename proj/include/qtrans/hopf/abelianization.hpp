#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"

#include <vector>

namespace qtrans {

struct Abelianization {
    /// H / I for I the two-sided *-ideal generated by all commutators. The
    /// antipode and comultiplication are carried along but not certified.
    HopfPtr quotient;
    /// r x n matrix of the quotient map on coefficients.
    Tensor projection;
    /// Indices of the basis elements of H whose images form the quotient basis.
    std::vector<std::size_t> representatives;
    std::size_t ideal_dim = 0;
};

/// The ideal is grown from the commutators e_i e_j - e_j e_i by closing its
/// span under left and right multiplication by basis elements and under the
/// star until the dimension stops increasing. The quotient basis is the set
/// of non-pivot columns of the ideal's reduced echelon form.
Abelianization abelianization(const FiniteHopfStar& h, double tol = kDefaultTolerance);

}  // namespace qtrans
