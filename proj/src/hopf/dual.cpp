#include "qtrans/hopf/dual.hpp"

#include "qtrans/hopf/axioms.hpp"
#include "qtrans/num/linalg.hpp"

namespace qtrans {

FiniteHopfStar dual_structure(const FiniteHopfStar& h) {
    const std::size_t n = h.dim();
    Tensor mult({n, n, n}, h.mode()), comult({n, n, n}, h.mode());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                mult(a, b, i) = h.comult()(i, a, b);
                comult(i, a, b) = h.mult()(a, b, i);
            }
    std::vector<std::string> names;
    for (const auto& s : h.basis_names()) names.push_back(s + "^");
    // f_j^*(e_i) = conj((star * conj(S))(j, i)), so the dual star matrix is
    // the conjugate transpose of star * conj(S).
    Tensor star = adjoint(matmul(h.star(), conj(h.antipode())));
    return FiniteHopfStar(std::move(names), std::move(mult), h.counit(), std::move(comult), h.unit(),
                          transpose(h.antipode()), std::move(star));
}

HopfPtr dual_hopf(const FiniteHopfStar& h, double tol) {
    const auto report = verify_axioms(h, tol);
    if (!report.passed()) {
        const auto f = report.first_failure();
        throw AxiomFailure("dual_hopf: input fails axiom '" + f->family + ": " + f->name + "'");
    }
    return share(dual_structure(h));
}

}  // namespace qtrans
