#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"
#include "qtrans/num/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qtrans {

struct IsomorphismCertificate {
    Residual algebra;
    Residual unit;
    Residual coalgebra;
    Residual counit;
    Residual antipode;
    Residual star;
    bool invertible = false;
    Verdict verdict = Verdict::Fail;
};

/// Checks that phi (column i = image of the i-th basis element of `from`)
/// is a bijective Hopf *-algebra map from -> to.
IsomorphismCertificate certify_hopf_isomorphism(const FiniteHopfStar& from, const FiniteHopfStar& to,
                                                const Tensor& phi, double tol = kDefaultTolerance);

/// Unitary group-like elements g (Delta g = g (x) g, g^* = g^{-1}), obtained
/// as the characters of the dual algebra.
std::vector<Tensor> group_likes(const FiniteHopfStar& h, std::uint64_t seed = 0, double tol = kDefaultTolerance);

/// Searches for a Hopf *-isomorphism from -> to. Candidates are assembled
/// from a bijection of group-likes that respects their products, a
/// dimension-preserving matching of algebra blocks, and for each block of
/// dimension d >= 2 an invertible U with U G_g = G'_g U on the block parts
/// of all group-likes. Any freedom left in U is fixed by a multistart
/// Newton solve of the coalgebra equations. The first candidate that
/// certifies is returned (float matrix).
std::optional<Tensor> find_hopf_isomorphism(const FiniteHopfStar& from, const FiniteHopfStar& to,
                                            std::uint64_t seed = 0, double tol = kDefaultTolerance);

}  // namespace qtrans
