#include "qtrans/hopf/wedderburn.hpp"

#include "qtrans/num/eigen_bridge.hpp"
#include "qtrans/num/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

namespace qtrans {

namespace {

Scalar coefficient_ratio(const Tensor& target, const Tensor& v) {
    // <target, v> / <target, target> in the coefficient inner product.
    return inner(target, v) / inner(target, target);
}

Tensor random_real_element(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Tensor x = Tensor::vector(n, Mode::Float);
    for (std::size_t i = 0; i < n; ++i) x[i] = Scalar(u(rng));
    return x;
}

std::vector<Tensor> matrix_units_of(const FiniteHopfStar& h, const Tensor& p, std::size_t d, std::mt19937_64& rng,
                                    double tol) {
    const std::size_t n = h.dim();
    if (d == 1) return {p};

    // Orthonormal basis of the block p*A.
    const Eigen::MatrixXcd Lp = to_eigen(h.left_multiplication(p));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(Lp);
    const Eigen::MatrixXcd V = qr.householderQ() * Eigen::MatrixXcd::Identity(n, d * d);

    for (int attempt = 0; attempt < 16; ++attempt) {
        const Tensor x = random_real_element(n, rng);
        const Tensor a = h.product(p, x + h.star_of(x));
        const Eigen::MatrixXcd R = V.adjoint() * to_eigen(h.left_multiplication(a)) * V;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(R, false);
        std::vector<double> ev;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()(i).real());
        std::sort(ev.begin(), ev.end());
        // Each eigenvalue of a in M_d appears d times in the left regular action.
        std::vector<double> lambda;
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i) {
            const double lo = ev[i * d], hi = ev[i * d + d - 1];
            ok = hi - lo <= 1e-6 * (1.0 + std::abs(hi));
            lambda.push_back((lo + hi) / 2);
        }
        for (std::size_t i = 1; i < d && ok; ++i) ok = lambda[i] - lambda[i - 1] > 1e-4;
        if (!ok) continue;

        std::vector<Tensor> proj;
        for (std::size_t i = 0; i < d; ++i) {
            Tensor q = p;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                const Tensor factor = Scalar(1.0 / (lambda[i] - lambda[j])) * (a - Scalar(lambda[j]) * p);
                q = h.product(q, factor);
            }
            proj.push_back(std::move(q));
        }

        std::vector<Tensor> first_row(d);
        first_row[0] = proj[0];
        bool good = true;
        for (std::size_t j = 1; j < d && good; ++j) {
            const Tensor y = random_real_element(n, rng) + Scalar(0.0, 1.0) * random_real_element(n, rng);
            const Tensor s = h.product(h.product(proj[0], y), proj[j]);
            const Scalar t = coefficient_ratio(proj[0], h.product(s, h.star_of(s)));
            if (t.real() <= 1e-6) {
                good = false;
                break;
            }
            first_row[j] = Scalar(1.0 / std::sqrt(t.real())) * s;
        }
        if (!good) continue;

        std::vector<Tensor> units(d * d);
        std::vector<Tensor> first_col(d);
        for (std::size_t i = 0; i < d; ++i) first_col[i] = i == 0 ? proj[0] : h.star_of(first_row[i]);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) units[i * d + j] = h.product(first_col[i], first_row[j]);

        double res = 0;
        Tensor sum = Tensor::vector(n, Mode::Float);
        for (std::size_t i = 0; i < d; ++i) sum = sum + units[i * d + i];
        res = std::max(res, max_abs(sum - p));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                res = std::max(res, max_abs(h.star_of(units[i * d + j]) - units[j * d + i]));
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l) {
                        const Tensor prod = h.product(units[i * d + j], units[k * d + l]);
                        res = std::max(res, max_abs(j == k ? prod - units[i * d + l] : prod));
                    }
            }
        if (res <= 1e-7 + tol) return units;
    }
    throw DecompositionFailure("algebra_blocks: could not build matrix units for a block of dimension " +
                               std::to_string(d));
}

}  // namespace

std::vector<AlgebraBlock> algebra_blocks(const FiniteHopfStar& hin, std::uint64_t seed, double tol) {
    const FiniteHopfStar h = hin.mode() == Mode::Float ? hin : hin.to_mode(Mode::Float);
    const std::size_t n = h.dim();

    Tensor commutators = Tensor::matrix(n * n, n, Mode::Float);
    for (std::size_t i = 0; i < n; ++i) {
        const Tensor c = h.left_multiplication(h.basis_vector(i)) - h.right_multiplication(h.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t col = 0; col < n; ++col) commutators(i * n + r, col) = c(r, col);
    }
    const std::vector<Tensor> center = nullspace(commutators, tol);
    const std::size_t m = center.size();
    if (m == 0) throw DecompositionFailure("algebra_blocks: trivial center");

    Tensor Z = Tensor::matrix(n, m, Mode::Float);
    for (std::size_t a = 0; a < m; ++a) Z.set_column(a, center[a]);
    const Tensor Zh = adjoint(Z);
    std::vector<Tensor> ops;
    for (std::size_t a = 0; a < m; ++a) {
        Tensor C = Tensor::matrix(m, m, Mode::Float);
        for (std::size_t b = 0; b < m; ++b) C.set_column(b, matmul(Zh, h.product(center[a], center[b])));
        ops.push_back(std::move(C));
    }
    const auto eig = simultaneous_eigenbasis(ops, seed, 1e-7);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<AlgebraBlock> blocks;
    std::size_t total = 0;
    for (const auto& w : eig) {
        const Tensor y = matmul(Z, w);
        const Scalar lambda = coefficient_ratio(y, h.product(y, y));
        if (lambda.abs() <= 1e-9) throw DecompositionFailure("algebra_blocks: nilpotent central element");
        const Tensor p = (Scalar(1.0) / lambda) * y;
        if (max_abs(h.product(p, p) - p) > 1e-7 || max_abs(h.star_of(p) - p) > 1e-7)
            throw DecompositionFailure("algebra_blocks: central idempotent is not a projection");
        const std::size_t d2 = matrix_rank(h.left_multiplication(p), 1e-8);
        const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d2))));
        if (d * d != d2) throw DecompositionFailure("algebra_blocks: block dimension is not a square");
        total += d2;
        blocks.push_back({d, p, matrix_units_of(h, p, d, rng, tol)});
    }
    if (total != n)
        throw DecompositionFailure("algebra_blocks: block dimensions sum to " + std::to_string(total) +
                                   " instead of " + std::to_string(n));

    auto fingerprint = [](const AlgebraBlock& b) {
        std::vector<std::pair<long long, long long>> key;
        for (const auto& c : b.central_idempotent.entries())
            key.emplace_back(std::llround(c.real() * 1e9), std::llround(c.imag() * 1e9));
        return key;
    };
    std::stable_sort(blocks.begin(), blocks.end(), [&](const AlgebraBlock& a, const AlgebraBlock& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return fingerprint(a) < fingerprint(b);
    });
    return blocks;
}

Tensor matrix_unit_basis(const std::vector<AlgebraBlock>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.matrix_units.size();
    Tensor W = Tensor::matrix(n, n, Mode::Float);
    std::size_t col = 0;
    for (const auto& b : blocks)
        for (const auto& u : b.matrix_units) W.set_column(col++, u.to_mode(Mode::Float));
    return W;
}

}  // namespace qtrans
