#include "qtrans/peter_weyl/peter_weyl.hpp"

#include "qtrans/hopf/dual.hpp"
#include "qtrans/hopf/wedderburn.hpp"
#include "qtrans/num/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qtrans {

namespace {

// S u (left) or u S (right) for a scalar matrix S and a matrix u of elements.
std::vector<Tensor> scalar_times(const Tensor& S, const std::vector<Tensor>& u, std::size_t d, bool left) {
    std::vector<Tensor> out(d * d, Tensor::vector(u.front().size(), Mode::Float));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (left)
                    out[i * d + j] = out[i * d + j] + S(i, k) * u[k * d + j];
                else
                    out[i * d + j] = out[i * d + j] + S(k, j) * u[i * d + k];
            }
    return out;
}

std::vector<std::pair<long long, long long>> fingerprint(const Tensor& t) {
    std::vector<std::pair<long long, long long>> key;
    for (const auto& c : t.entries()) key.emplace_back(std::llround(c.real() * 1e9), std::llround(c.imag() * 1e9));
    return key;
}

}  // namespace

std::vector<PeterWeylBlock> coalgebra_blocks(const HopfPtr& hp, const HaarState& hs, std::uint64_t seed, double tol) {
    const FiniteHopfStar h = hp->to_mode(Mode::Float);
    const std::size_t n = h.dim();
    const auto dual_blocks = algebra_blocks(*dual_hopf(*hp, tol), seed, tol);
    const auto Winv = inverse(matrix_unit_basis(dual_blocks), tol);
    if (!Winv) throw DecompositionFailure("coalgebra_blocks: matrix units of the dual are not a basis");
    const Tensor hv = hs.h.values.to_mode(Mode::Float);
    const Tensor one = h.unit();

    std::vector<PeterWeylBlock> out;
    std::size_t row = 0;
    for (const auto& db : dual_blocks) {
        const std::size_t d = db.dim;
        std::vector<Tensor> v;
        for (std::size_t r = 0; r < d * d; ++r) v.push_back(Winv->row(row + r));
        row += d * d;

        Tensor Q = Tensor::matrix(d, d, Mode::Float);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    Q(i, j) += dot(hv, h.product(h.star_of(v[k * d + i]), v[k * d + j]));
        if (!is_positive_definite(Q, tol)) throw DecompositionFailure("coalgebra_blocks: averaged Gram block is singular");

        PeterWeylBlock b;
        b.dim = d;
        b.entries = scalar_times(hermitian_power(Q, -0.5), scalar_times(hermitian_power(Q, 0.5), v, d, true), d, false);
        b.character = Tensor::vector(n, Mode::Float);
        for (std::size_t i = 0; i < d; ++i) b.character = b.character + b.u(i, i);

        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Tensor rhs = Tensor::vector(n * n, Mode::Float);
                Tensor uu = Tensor::vector(n, Mode::Float), uu_adj = Tensor::vector(n, Mode::Float);
                for (std::size_t k = 0; k < d; ++k) {
                    rhs = rhs + h.outer(b.u(i, k), b.u(k, j));
                    uu = uu + h.product(b.u(i, k), h.star_of(b.u(j, k)));
                    uu_adj = uu_adj + h.product(h.star_of(b.u(k, i)), b.u(k, j));
                }
                const Tensor target = i == j ? one : Tensor::vector(n, Mode::Float);
                b.coalgebra_law.observe_float(max_abs(h.coproduct(b.u(i, j)) - rhs));
                b.coalgebra_law.observe_float((h.counit_of(b.u(i, j)) - Scalar(i == j ? 1.0 : 0.0)).abs());
                b.unitarity.observe_float(max_abs(uu - target));
                b.unitarity.observe_float(max_abs(uu_adj - target));
            }
        out.push_back(std::move(b));
    }
    std::size_t total = 0;
    for (const auto& b : out) total += b.dim * b.dim;
    if (total != n) throw DecompositionFailure("coalgebra_blocks: block dimensions do not add up");
    std::stable_sort(out.begin(), out.end(), [](const PeterWeylBlock& a, const PeterWeylBlock& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return fingerprint(a.character) < fingerprint(b.character);
    });
    return out;
}

Tensor peter_weyl_basis(const std::vector<PeterWeylBlock>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.entries.size();
    Tensor W = Tensor::matrix(n, n, Mode::Float);
    std::size_t col = 0;
    for (const auto& b : blocks)
        for (const auto& u : b.entries) W.set_column(col++, u);
    return W;
}

TranslationTuple translation_tuple(const Translation& alpha, const std::vector<PeterWeylBlock>& blocks, double tol) {
    const Tensor A = alpha.matrix.to_mode(Mode::Float);
    const bool right = alpha.side == Side::Right;
    TranslationTuple out;
    for (const auto& b : blocks) {
        const std::size_t d = b.dim;
        const std::size_t n = b.entries.front().size();
        Tensor T = Tensor::matrix(d, d, Mode::Float);
        // Right: alpha(u_ij) = sum_k T_ik u_kj, one system per row i.
        // Left:  alpha(u_ij) = sum_k u_ik T_kj, one system per column j.
        for (std::size_t fixed = 0; fixed < d; ++fixed) {
            Tensor M = Tensor::matrix(n * d, d, Mode::Float);
            Tensor rhs = Tensor::vector(n * d, Mode::Float);
            for (std::size_t free = 0; free < d; ++free) {
                const Tensor image = matmul(A, right ? b.u(fixed, free) : b.u(free, fixed));
                for (std::size_t k = 0; k < d; ++k) {
                    const Tensor& basis = right ? b.u(k, free) : b.u(free, k);
                    for (std::size_t t = 0; t < n; ++t) M(free * n + t, k) = basis[t];
                }
                for (std::size_t t = 0; t < n; ++t) rhs[free * n + t] = image[t];
            }
            const auto sol = solve_linear(M, rhs, tol);
            if (!sol) throw NotUnitary("translation_tuple: translation does not preserve a Peter-Weyl block");
            out.action.observe_float(sol.residual);
            for (std::size_t k = 0; k < d; ++k) {
                if (right)
                    T(fixed, k) = (*sol.solution)[k];
                else
                    T(k, fixed) = (*sol.solution)[k];
            }
        }
        out.unitarity.observe_float(max_abs(matmul(T, adjoint(T)) - Tensor::identity(d, Mode::Float)));
        out.matrices.push_back(std::move(T));
    }
    if (out.unitarity.verdict(tol) == Verdict::Fail)
        throw NotUnitary("translation_tuple: block matrix is not unitary (residual " +
                         std::to_string(out.unitarity.value) + ")");
    return out;
}

EmbeddingReport verify_embedding(const TranslationMonoid& monoid, const std::vector<PeterWeylBlock>& blocks,
                                 double tol) {
    EmbeddingReport rep;
    for (const auto& t : monoid.elements) {
        rep.tuples.push_back(translation_tuple(t, blocks, tol));
        rep.unitarity.merge(rep.tuples.back().unitarity);
    }
    const std::size_t m = rep.tuples.size();
    auto distance = [&](std::size_t a, std::size_t b) {
        double d = 0;
        for (std::size_t g = 0; g < blocks.size(); ++g)
            d = std::max(d, max_abs(rep.tuples[a].matrices[g] - rep.tuples[b].matrices[g]));
        return d;
    };
    rep.injective = true;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (distance(a, b) <= 1e-6) {
                rep.injective = false;
                if (rep.violation.empty())
                    rep.violation = "translations " + std::to_string(a) + " and " + std::to_string(b) + " share a tuple";
            }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t g = 0; g < blocks.size(); ++g) {
                const Tensor prod = matmul(rep.tuples[a].matrices[g], rep.tuples[b].matrices[g]);
                rep.homomorphism.observe_float(max_abs(rep.tuples[monoid.table[a][b]].matrices[g] - prod));
            }
    rep.verdict = combine(rep.homomorphism.verdict(tol), rep.unitarity.verdict(tol));
    if (!rep.injective) rep.verdict = Verdict::Fail;
    if (rep.verdict != Verdict::Pass && rep.violation.empty())
        rep.violation = "tuple map is not a unitary homomorphism (residual " +
                        std::to_string(std::max(rep.homomorphism.value, rep.unitarity.value)) + ")";
    return rep;
}

}  // namespace qtrans
