#include "qtrans/hopf/abelianization.hpp"

#include "qtrans/num/linalg.hpp"

#include <deque>

namespace qtrans {

Abelianization abelianization(const FiniteHopfStar& h, double tol) {
    const std::size_t n = h.dim();
    const Mode mode = h.mode();
    std::vector<Tensor> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(h.basis_vector(i));

    IncrementalSpan ideal(n, tol);
    std::deque<Tensor> pending;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pending.push_back(h.product(e[i], e[j]) - h.product(e[j], e[i]));
    while (!pending.empty()) {
        Tensor v = std::move(pending.front());
        pending.pop_front();
        if (!ideal.add(v)) continue;
        for (std::size_t k = 0; k < n; ++k) {
            pending.push_back(h.product(e[k], v));
            pending.push_back(h.product(v, e[k]));
        }
        pending.push_back(h.star_of(v));
    }

    Abelianization out;
    out.ideal_dim = ideal.dim();
    std::vector<bool> is_pivot(n, false);
    EchelonForm ef;
    if (ideal.dim() > 0) {
        ef = rref(ideal.basis_matrix(), tol);
        for (auto p : ef.pivots) is_pivot[p] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (!is_pivot[k]) out.representatives.push_back(k);
    const std::size_t r = out.representatives.size();

    // e_{p_t} = -sum_k R(t,k) e_k modulo the ideal.
    Tensor P = Tensor::matrix(r, n, mode);
    for (std::size_t a = 0; a < r; ++a) {
        const std::size_t k = out.representatives[a];
        P(a, k) = mode == Mode::Exact ? Scalar(1) : Scalar(1.0);
        for (std::size_t t = 0; t < ef.pivots.size(); ++t) P(a, ef.pivots[t]) = -ef.reduced(t, k);
    }

    Tensor mult({r, r, r}, mode), comult({r, r, r}, mode);
    Tensor counit = Tensor::vector(r, mode), antipode = Tensor::matrix(r, r, mode), star = Tensor::matrix(r, r, mode);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < r; ++a) {
        const std::size_t ka = out.representatives[a];
        names.push_back("[" + h.basis_names()[ka] + "]");
        for (std::size_t b = 0; b < r; ++b) {
            const Tensor prod = matmul(P, h.product(e[ka], e[out.representatives[b]]));
            for (std::size_t c = 0; c < r; ++c) mult(a, b, c) = prod[c];
        }
        const Tensor d = h.coproduct(e[ka]);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = d[p * n + q];
                if (c.is_zero(0.0)) continue;
                for (std::size_t x = 0; x < r; ++x) {
                    if (P(x, p).is_zero(0.0)) continue;
                    for (std::size_t y = 0; y < r; ++y)
                        if (!P(y, q).is_zero(0.0)) comult(a, x, y) += c * P(x, p) * P(y, q);
                }
            }
        counit[a] = h.counit()[ka];
        antipode.set_column(a, matmul(P, h.antipode_of(e[ka])));
        star.set_column(a, matmul(P, h.star_of(e[ka])));
    }
    out.quotient = share(FiniteHopfStar(std::move(names), std::move(mult), matmul(P, h.unit()), std::move(comult),
                                        std::move(counit), std::move(antipode), std::move(star)));
    out.projection = std::move(P);
    return out;
}

}  // namespace qtrans
