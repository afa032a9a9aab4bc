#include "qtrans/haar/haar.hpp"

#include "qtrans/num/linalg.hpp"

namespace qtrans {

HaarState haar_state(const HopfPtr& hp, double tol) {
    const FiniteHopfStar& h = *hp;
    const std::size_t n = h.dim();
    const Mode mode = h.mode();
    const Tensor& D = h.comult();
    const Tensor& u = h.unit();

    // Row (i, j): sum_k D[i,j,k] h_k - u_j h_i = 0.
    Tensor system = Tensor::matrix(n * n, n, mode);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) system(i * n + j, k) = D(i, j, k);
            system(i * n + j, i) -= u[j];
        }
    const auto null = nullspace(system, tol);
    if (null.size() != 1)
        throw NoHaar("haar_state: invariance system has a solution space of dimension " +
                     std::to_string(null.size()) + ", expected 1");
    const Scalar norm = dot(u, null[0]);
    if (norm.is_zero(tol)) throw NoHaar("haar_state: invariant functional vanishes on the unit");

    HaarState hs;
    hs.algebra = hp;
    hs.solution_dim = 1;
    hs.h = make_functional(hp, (Scalar(1) / norm) * null[0]);
    const Tensor& hv = hs.h.values;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar left, right;
            for (std::size_t k = 0; k < n; ++k) {
                left += D(i, j, k) * hv[k];
                right += D(i, k, j) * hv[k];
            }
            hs.left_invariance.observe(left - hv[i] * u[j]);
            hs.right_invariance.observe(right - hv[i] * u[j]);
        }
    }
    hs.gram = gram_matrix(h, hv);
    return hs;
}

Tensor gram_matrix(const FiniteHopfStar& h, const Tensor& hv) {
    const std::size_t n = h.dim();
    Tensor G = Tensor::matrix(n, n, hv.mode() == Mode::Exact ? h.mode() : Mode::Float);
    for (std::size_t i = 0; i < n; ++i) {
        const Tensor si = h.star_of(h.basis_vector(i));
        for (std::size_t j = 0; j < n; ++j) G(i, j) = dot(hv, h.product(si, h.basis_vector(j)));
    }
    return G;
}

GnsRep gns_representation(const HaarState& hs, double tol) {
    const FiniteHopfStar& h = *hs.algebra;
    const std::size_t n = h.dim();
    if (!is_positive_definite(hs.gram, tol)) throw NotFaithful("gns_representation: Gram matrix is not positive definite");

    GnsRep out;
    out.algebra = hs.algebra;
    const Tensor G = hs.gram.to_mode(Mode::Float);
    const Tensor B = hermitian_power(G, -0.5);
    const Tensor Binv = hermitian_power(G, 0.5);
    out.change_of_basis = B;
    for (std::size_t i = 0; i < n; ++i)
        out.rep.push_back(matmul(Binv, matmul(h.left_multiplication(h.basis_vector(i)).to_mode(Mode::Float), B)));

    const Tensor I = Tensor::identity(n, Mode::Float);
    Tensor pi_one = Tensor::matrix(n, n, Mode::Float);
    for (std::size_t i = 0; i < n; ++i) pi_one = pi_one + h.unit()[i] * out.rep[i];
    out.homomorphism_residual.observe_float(max_abs(pi_one - I));

    auto rep_of = [&](const Tensor& x) {
        Tensor m = Tensor::matrix(n, n, Mode::Float);
        for (std::size_t k = 0; k < n; ++k)
            if (!x[k].is_zero(0.0)) m = m + x[k] * out.rep[k];
        return m;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Tensor ei = h.basis_vector(i);
        out.star_residual.observe_float(max_abs(rep_of(h.star_of(ei)) - adjoint(out.rep[i])));
        for (std::size_t j = 0; j < n; ++j) {
            const Tensor prod = rep_of(h.product(ei, h.basis_vector(j)));
            out.homomorphism_residual.observe_float(max_abs(prod - matmul(out.rep[i], out.rep[j])));
        }
    }
    return out;
}

CstarReport cstar_report(const HopfPtr& h, double tol) {
    CstarReport r;
    HaarState hs;
    try {
        hs = haar_state(h, tol);
    } catch (const NoHaar& e) {
        r.reason = e.what();
        return r;
    }
    r.haar_found = true;
    const auto ev = hermitian_eigenvalues(hs.gram);
    r.gram_min = ev.front();
    r.gram_max = ev.back();
    r.gram_positive = is_positive_definite(hs.gram, tol);
    if (!r.gram_positive) {
        r.reason = "Gram matrix of the Haar state is not positive definite";
        return r;
    }
    const GnsRep g = gns_representation(hs, tol);
    r.representation = combine(g.star_residual.verdict(tol), g.homomorphism_residual.verdict(tol));
    if (r.representation != Verdict::Pass) r.reason = "GNS map is not a *-representation";
    return r;
}

bool is_cstar(const HopfPtr& h, double tol) { return cstar_report(h, tol).ok(); }

Residual traciality_residual(const HaarState& hs) {
    const FiniteHopfStar& h = *hs.algebra;
    Residual r;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j) {
            const Tensor ei = h.basis_vector(i), ej = h.basis_vector(j);
            r.observe(dot(hs.h.values, h.product(ei, ej)) - dot(hs.h.values, h.product(ej, ei)));
        }
    return r;
}

Residual antipode_invariance_residual(const HaarState& hs) {
    const Functional hs_s = compose_antipode(hs.h);
    Residual r;
    for (std::size_t i = 0; i < hs.h.values.size(); ++i) r.observe(hs_s.values[i] - hs.h.values[i]);
    return r;
}

}  // namespace qtrans
