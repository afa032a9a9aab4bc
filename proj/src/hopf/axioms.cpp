#include "qtrans/hopf/axioms.hpp"

#include "qtrans/num/linalg.hpp"

namespace qtrans {

namespace {

void observe_diff(Residual& r, const Tensor& a, const Tensor& b) {
    for (std::size_t i = 0; i < a.size(); ++i) r.observe(a[i] - b[i]);
}

class Checker {
public:
    // References returned by add() must stay valid while later checks are added.
    explicit Checker(double tol) : tol_(tol) { report_.checks.reserve(32); }

    Residual& add(std::string family, std::string name) {
        report_.checks.push_back({std::move(family), std::move(name), {}, Verdict::Pass});
        return report_.checks.back().residual;
    }

    AxiomReport finish() {
        for (auto& c : report_.checks) {
            c.verdict = c.residual.verdict(tol_);
            report_.verdict = combine(report_.verdict, c.verdict);
            report_.exact = report_.exact && c.residual.exact;
        }
        return std::move(report_);
    }

private:
    double tol_;
    AxiomReport report_;
};

}  // namespace

std::optional<AxiomCheck> AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (c.verdict != Verdict::Pass) return c;
    return std::nullopt;
}

double AxiomReport::max_residual() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.residual.value);
    return m;
}

AxiomReport verify_axioms(const FiniteHopfStar& h, double tol) {
    const std::size_t n = h.dim();
    const Mode mode = h.mode();
    const Tensor one = h.unit();
    std::vector<Tensor> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(h.basis_vector(i));
    std::vector<Tensor> delta;
    for (std::size_t i = 0; i < n; ++i) delta.push_back(h.coproduct(e[i]));

    Checker ck(tol);

    {
        auto& assoc = ck.add("algebra", "associativity");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Tensor ij = h.product(e[i], e[j]);
                for (std::size_t l = 0; l < n; ++l)
                    observe_diff(assoc, h.product(ij, e[l]), h.product(e[i], h.product(e[j], e[l])));
            }
        auto& unit = ck.add("algebra", "unit");
        for (std::size_t i = 0; i < n; ++i) {
            observe_diff(unit, h.product(one, e[i]), e[i]);
            observe_diff(unit, h.product(e[i], one), e[i]);
        }
    }

    {
        auto& coassoc = ck.add("coalgebra", "coassociativity");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    for (std::size_t r = 0; r < n; ++r) {
                        // (Delta (x) id)Delta e_i vs (id (x) Delta)Delta e_i at e_p (x) e_q (x) e_r
                        Scalar lhs, rhs;
                        for (std::size_t j = 0; j < n; ++j) {
                            const Scalar& a = h.comult()(i, j, r);
                            if (!a.is_zero(0.0)) lhs += a * h.comult()(j, p, q);
                            const Scalar& b = h.comult()(i, p, j);
                            if (!b.is_zero(0.0)) rhs += b * h.comult()(j, q, r);
                        }
                        coassoc.observe(lhs - rhs);
                    }
        auto& counit = ck.add("coalgebra", "counit");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar left, right;
                for (std::size_t j = 0; j < n; ++j) {
                    left += h.counit()[j] * h.comult()(i, j, k);
                    right += h.counit()[j] * h.comult()(i, k, j);
                }
                const Scalar delta_ik = (i == k) ? Scalar(1) : Scalar(0);
                counit.observe(left - delta_ik);
                counit.observe(right - delta_ik);
            }
    }

    {
        auto& mult = ck.add("bialgebra", "comultiplication multiplicative");
        auto& eps = ck.add("bialgebra", "counit multiplicative");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Tensor ij = h.product(e[i], e[j]);
                observe_diff(mult, h.coproduct(ij), h.tensor_product(delta[i], delta[j]));
                eps.observe(h.counit_of(ij) - h.counit()[i] * h.counit()[j]);
            }
        auto& unital = ck.add("bialgebra", "unital");
        observe_diff(unital, h.coproduct(one), h.outer(one, one));
        unital.observe(h.counit_of(one) - Scalar(1));
    }

    {
        auto& left = ck.add("antipode", "m(S x id)Delta = eps 1");
        auto& right = ck.add("antipode", "m(id x S)Delta = eps 1");
        std::vector<Tensor> s;
        for (std::size_t j = 0; j < n; ++j) s.push_back(h.antipode_of(e[j]));
        for (std::size_t i = 0; i < n; ++i) {
            Tensor l = Tensor::vector(n, mode), r = Tensor::vector(n, mode);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar& c = delta[i][a * n + b];
                    if (c.is_zero(0.0)) continue;
                    l = l + c * h.product(s[a], e[b]);
                    r = r + c * h.product(e[a], s[b]);
                }
            const Tensor target = h.counit()[i] * one;
            observe_diff(left, l, target);
            observe_diff(right, r, target);
        }
    }

    {
        auto& inv = ck.add("star", "involution");
        observe_diff(inv, matmul(h.star(), conj(h.star())), Tensor::identity(n));
        auto& anti = ck.add("star", "antimultiplicative");
        std::vector<Tensor> st;
        for (std::size_t i = 0; i < n; ++i) st.push_back(h.star_of(e[i]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                observe_diff(anti, h.star_of(h.product(e[i], e[j])), h.product(st[j], st[i]));
        auto& coal = ck.add("star", "comultiplication compatible");
        for (std::size_t i = 0; i < n; ++i) observe_diff(coal, h.coproduct(st[i]), h.star2_of(delta[i]));
        auto& eps = ck.add("star", "counit compatible");
        for (std::size_t i = 0; i < n; ++i) eps.observe(h.counit_of(st[i]) - h.counit()[i].conj());
        auto& sss = ck.add("star", "S*S* = id");
        const Tensor m = matmul(matmul(h.antipode(), h.star()), matmul(conj(h.antipode()), conj(h.star())));
        observe_diff(sss, m, Tensor::identity(n));
    }

    return ck.finish();
}

}  // namespace qtrans
