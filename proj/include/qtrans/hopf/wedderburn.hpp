#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"

#include <cstdint>
#include <vector>

namespace qtrans {

class DecompositionFailure : public Error {
public:
    using Error::Error;
};

/// One simple summand M_d(C) of a semisimple *-algebra.
struct AlgebraBlock {
    std::size_t dim = 0;
    Tensor central_idempotent;
    /// Matrix units E_ij (row-major, d*d of them): E_ij E_kl = delta_jk E_il,
    /// E_ij^* = E_ji, sum_i E_ii = central_idempotent.
    std::vector<Tensor> matrix_units;

    const Tensor& unit(std::size_t i, std::size_t j) const { return matrix_units[i * dim + j]; }
};

/// Block decomposition of the algebra part of h (only mult, unit and star
/// are used). Minimal central idempotents come from a common eigenbasis of
/// the center's multiplication operators; matrix units from the spectral
/// projections of a random self-adjoint element of each block. Float mode.
///
/// Blocks are ordered by (dim, rounded coefficients of the central
/// idempotent), which does not depend on the seed; the matrix units do.
/// Throws DecompositionFailure if the algebra is not semisimple with a
/// positive star, i.e. the block dimensions do not add up.
std::vector<AlgebraBlock> algebra_blocks(const FiniteHopfStar& h, std::uint64_t seed = 0,
                                         double tol = kDefaultTolerance);

/// The n x n matrix whose columns are all matrix units, block by block.
Tensor matrix_unit_basis(const std::vector<AlgebraBlock>& blocks);

}  // namespace qtrans
