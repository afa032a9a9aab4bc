#include "qtrans/examples/builtins.hpp"
#include "qtrans/haar/haar.hpp"
#include "qtrans/num/linalg.hpp"

#include <doctest.h>

#include "support/oracles.hpp"

using namespace qtrans;

TEST_CASE("Haar state of C(G) is the exact uniform state") {
    for (const char* name : {"fn:Z1", "fn:Z2", "fn:Z3", "fn:Z4", "fn:Z2xZ2", "fn:S3"}) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto hs = haar_state(h);
        CHECK(hs.solution_dim == 1);
        for (const auto& v : hs.h.values.entries()) {
            CHECK(v.is_exact());
            CHECK((v - Scalar::ratio(1, long(h->dim()))).is_zero(0.0));
        }
        CHECK(hs.right_invariance.verdict() == Verdict::Pass);
        CHECK(hs.right_invariance.exact);
    }
}

TEST_CASE("Haar state of C[G] picks the identity coefficient") {
    for (const char* name : {"grp:Z3", "grp:Z2xZ2", "grp:S3"}) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto hs = haar_state(h);
        CHECK(hs.solution_dim == 1);
        CHECK(approx_equal(hs.h.values, h->unit(), 0.0));
    }
}

TEST_CASE("Haar state of Kac-Paljutkin") {
    const auto h = share(builtin("kac_paljutkin"));
    const auto hs = haar_state(h);
    const Scalar e = Scalar::ratio(1, 8), q = Scalar::ratio(1, 4);
    const Tensor expected = Tensor::from_values({e, e, e, e, q, 0, 0, q});
    CHECK(approx_equal(hs.h.values, expected, 0.0));
    CHECK(traciality_residual(hs).verdict() == Verdict::Pass);
    CHECK(antipode_invariance_residual(hs).verdict() == Verdict::Pass);
}

TEST_CASE("derived Haar checks hold on all builtins in both modes") {
    for (const auto& name : builtin_names())
        for (Mode m : {Mode::Exact, Mode::Float}) {
            CAPTURE(name);
            const auto h = share(builtin(name).to_mode(m));
            const auto hs = haar_state(h);
            CHECK(hs.solution_dim == 1);
            CHECK(hs.left_invariance.verdict() == Verdict::Pass);
            CHECK(hs.right_invariance.verdict() == Verdict::Pass);
            CHECK(antipode_invariance_residual(hs).verdict() == Verdict::Pass);
            CHECK(is_cstar(h));
        }
}

TEST_CASE("GNS representation is a faithful *-representation") {
    for (const auto& name : core_builtins()) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto g = gns_representation(haar_state(h));
        CHECK(g.star_residual.value <= 1e-9);
        CHECK(g.homomorphism_residual.value <= 1e-9);
        REQUIRE(g.rep.size() == h->dim());
        const std::size_t n = h->dim();
        double hom = 0, star = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Tensor pi_star = Tensor::matrix(n, n, Mode::Float);
            const Tensor xs = h->star_of(h->basis_vector(i));
            for (std::size_t k = 0; k < n; ++k) pi_star = pi_star + xs[k] * g.rep[k];
            star = std::max(star, oracle::max_difference(pi_star, adjoint(g.rep[i])));
            for (std::size_t j = 0; j < n; ++j) {
                Tensor rhs = Tensor::matrix(n, n, Mode::Float);
                for (std::size_t k = 0; k < n; ++k) rhs = rhs + h->mult()(i, j, k) * g.rep[k];
                hom = std::max(hom, oracle::max_difference(matmul(g.rep[i], g.rep[j]), rhs));
            }
        }
        CHECK(hom <= 1e-9);
        CHECK(star <= 1e-9);
    }
}

TEST_CASE("an indefinite Gram matrix is rejected") {
    const auto f = builtin("fn:Z2");
    const Tensor swap = Tensor::from_rows({{0, 1}, {1, 0}});
    const auto h = share(FiniteHopfStar(f.basis_names(), f.mult(), f.unit(), f.comult(), f.counit(), f.antipode(), swap));
    const auto rep = cstar_report(h);
    CHECK(rep.haar_found);
    CHECK(!rep.gram_positive);
    CHECK(!rep.ok());
    CHECK(!rep.reason.empty());
    CHECK_THROWS_AS(gns_representation(haar_state(h)), NotFaithful);
}

TEST_CASE("Gram matrix oracle on C(S3)") {
    const auto h = share(builtin("fn:S3"));
    const auto hs = haar_state(h);
    CHECK(approx_equal(hs.gram, Scalar::ratio(1, 6) * Tensor::identity(6), 0.0));
}
