#pragma once

#include "qtrans/hopf/element.hpp"
#include "qtrans/num/verdict.hpp"

#include <string>
#include <vector>

namespace qtrans {

class NoHaar : public Error {
public:
    using Error::Error;
};

class NotFaithful : public Error {
public:
    using Error::Error;
};

struct HaarState {
    HopfPtr algebra;
    Functional h;
    /// G[i,j] = h(e_i^* e_j).
    Tensor gram;
    /// Dimension of the solution space of the homogeneous invariance system.
    std::size_t solution_dim = 0;
    /// max |(id (x) h)Delta(e_i) - h(e_i) 1| over i.
    Residual left_invariance;
    /// max |(h (x) id)Delta(e_i) - h(e_i) 1| over i.
    Residual right_invariance;
};

/// The unique functional with h(1) = 1 and (id (x) h)Delta = h(.)1, found as
/// the nullspace of the linear invariance system. Right invariance is
/// measured, not imposed. Throws NoHaar when the solution space is not
/// one-dimensional or cannot be normalized.
HaarState haar_state(const HopfPtr& h, double tol = kDefaultTolerance);

/// G[i,j] = h(e_i^* e_j) for a functional given by its basis values.
Tensor gram_matrix(const FiniteHopfStar& h, const Tensor& haar_values);

/// Left regular representation on H with inner product <x, y> = h(x^* y),
/// written in the orthonormal basis given by the columns of G^{-1/2}.
struct GnsRep {
    HopfPtr algebra;
    /// rep[i] = pi(e_i).
    std::vector<Tensor> rep;
    /// Columns are a Gram-orthonormal basis of H: B = G^{-1/2}.
    Tensor change_of_basis;
    /// max |pi(e_i^*) - pi(e_i)^dagger|.
    Residual star_residual;
    /// max |pi(e_i e_j) - pi(e_i) pi(e_j)| together with |pi(1) - I|.
    Residual homomorphism_residual;
};

/// Throws NotFaithful if the Gram matrix is not positive definite.
GnsRep gns_representation(const HaarState& hs, double tol = kDefaultTolerance);

struct CstarReport {
    bool haar_found = false;
    bool gram_positive = false;
    /// Smallest and largest Gram eigenvalue.
    double gram_min = 0.0;
    double gram_max = 0.0;
    Verdict representation = Verdict::Fail;
    /// Empty when the check passes.
    std::string reason;

    bool ok() const { return haar_found && gram_positive && representation == Verdict::Pass; }
};

CstarReport cstar_report(const HopfPtr& h, double tol = kDefaultTolerance);
/// True iff haar_state succeeds, the Gram matrix is positive definite and
/// the GNS map is a *-representation.
bool is_cstar(const HopfPtr& h, double tol = kDefaultTolerance);

/// max |h(e_i e_j) - h(e_j e_i)|.
Residual traciality_residual(const HaarState& hs);
/// max |h(S e_i) - h(e_i)|.
Residual antipode_invariance_residual(const HaarState& hs);

}  // namespace qtrans
