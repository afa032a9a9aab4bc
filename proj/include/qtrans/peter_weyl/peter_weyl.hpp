#pragma once

#include "qtrans/haar/haar.hpp"
#include "qtrans/translations/translations.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtrans {

class NotUnitary : public Error {
public:
    using Error::Error;
};

/// A simple subcoalgebra with a unitary corepresentation matrix u:
/// Delta(u_ij) = sum_k u_ik (x) u_kj, eps(u_ij) = delta_ij.
struct PeterWeylBlock {
    std::size_t dim = 0;
    /// Coefficient vectors of u_ij in H, row-major.
    std::vector<Tensor> entries;
    /// max |Delta(u_ij) - sum_k u_ik (x) u_kj| and |eps(u_ij) - delta_ij|.
    Residual coalgebra_law;
    /// max over both u u^* = 1 and u^* u = 1.
    Residual unitarity;
    /// Coefficients of the character element sum_i u_ii; basis-free.
    Tensor character;

    const Tensor& u(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

/// Simple subcoalgebras of h from the block decomposition of the dual
/// algebra, each unitarized by u = Q^{1/2} v Q^{-1/2} with
/// Q_ij = h(sum_k v_ki^* v_kj). Blocks are ordered by dimension, then by the
/// rounded coefficients of their character elements. Float mode. Throws
/// DecompositionFailure if the block dimensions do not add up.
std::vector<PeterWeylBlock> coalgebra_blocks(const HopfPtr& h, const HaarState& hs, std::uint64_t seed = 0,
                                             double tol = kDefaultTolerance);

/// The n x n matrix whose columns are all u_ij across blocks.
Tensor peter_weyl_basis(const std::vector<PeterWeylBlock>& blocks);

/// Per-block matrices T with alpha(u) = T u (right translations) or
/// alpha(u) = u T (left translations).
struct TranslationTuple {
    std::vector<Tensor> matrices;
    /// max |T T^dagger - I|.
    Residual unitarity;
    /// Residual of the linear solve for T.
    Residual action;
};

/// Throws NotUnitary if alpha does not act on some block by a unitary.
TranslationTuple translation_tuple(const Translation& alpha, const std::vector<PeterWeylBlock>& blocks,
                                   double tol = kDefaultTolerance);

struct EmbeddingReport {
    std::vector<TranslationTuple> tuples;
    bool injective = false;
    /// max |T(table[a][b]) - T(a) T(b)| blockwise.
    Residual homomorphism;
    Residual unitarity;
    Verdict verdict = Verdict::Fail;
    /// Empty when the embedding checks pass.
    std::string violation;
};

/// Checks that alpha -> (T_gamma) is injective on the monoid and carries its
/// table to blockwise matrix products.
EmbeddingReport verify_embedding(const TranslationMonoid& monoid, const std::vector<PeterWeylBlock>& blocks,
                                 double tol = kDefaultTolerance);

}  // namespace qtrans
