#include "qtrans/examples/builtins.hpp"
#include "qtrans/hopf/abelianization.hpp"
#include "qtrans/hopf/axioms.hpp"
#include "qtrans/hopf/dual.hpp"
#include "qtrans/hopf/element.hpp"
#include "qtrans/hopf/wedderburn.hpp"
#include "qtrans/num/linalg.hpp"

#include <doctest.h>

#include "support/oracles.hpp"

#include <algorithm>
#include <map>

using namespace qtrans;

namespace {

FiniteHopfStar with_antipode(const FiniteHopfStar& h, Tensor s) {
    return FiniteHopfStar(h.basis_names(), h.mult(), h.unit(), h.comult(), h.counit(), std::move(s), h.star());
}

FiniteHopfStar with_star(const FiniteHopfStar& h, Tensor s) {
    return FiniteHopfStar(h.basis_names(), h.mult(), h.unit(), h.comult(), h.counit(), h.antipode(), std::move(s));
}

std::vector<std::size_t> block_dims(const std::vector<AlgebraBlock>& blocks) {
    std::vector<std::size_t> d;
    for (const auto& b : blocks) d.push_back(b.dim);
    return d;
}

}  // namespace

TEST_CASE("every builtin passes the axioms with exact zero residual") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto h = builtin(name);
        CHECK(h.mode() == Mode::Exact);
        const auto rep = verify_axioms(h);
        CHECK(rep.passed());
        CHECK(rep.exact);
        CHECK(rep.max_residual() == 0.0);
        const auto frep = verify_axioms(h.to_mode(Mode::Float));
        CHECK(frep.passed());
        CHECK(frep.max_residual() <= 1e-12);
    }
}

TEST_CASE("zero antipode fails the antipode family") {
    const auto h = builtin("fn:S3");
    const auto rep = verify_axioms(with_antipode(h, Tensor::matrix(h.dim(), h.dim())));
    CHECK(!rep.passed());
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->family == "antipode");
}

TEST_CASE("star = -I fails the star family") {
    const auto h = builtin("kac_paljutkin");
    const auto rep = verify_axioms(with_star(h, Scalar(-1) * Tensor::identity(h.dim())));
    CHECK(!rep.passed());
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->family == "star");
}

TEST_CASE("a small float perturbation lands in the suspicious band") {
    const auto h = builtin("fn:Z2").to_mode(Mode::Float);
    Tensor m = h.mult();
    m(0, 0, 0) = Scalar(1.0 + 1e-8);
    const FiniteHopfStar p(h.basis_names(), m, h.unit(), h.comult(), h.counit(), h.antipode(), h.star());
    CHECK(verify_axioms(p).verdict == Verdict::Suspicious);
}

TEST_CASE("element operations on the group algebra") {
    const auto h = share(builtin("grp:S3"));
    const auto t = basis_element(h, 1);
    CHECK(approx_equal(multiply(t, t).coeffs, one(h).coeffs, 0.0));
    CHECK(approx_equal(apply_antipode(basis_element(h, 4)).coeffs, basis_element(h, 5).coeffs, 0.0));
    CHECK(approx_equal(apply_star(basis_element(h, 4)).coeffs, basis_element(h, 5).coeffs, 0.0));
    const Functional eps = counit_functional(h);
    CHECK(approx_equal(convolution(eps, eps).values, eps.values, 0.0));
}

TEST_CASE("double dual equals the original entrywise") {
    for (const auto& name : core_builtins()) {
        CAPTURE(name);
        const auto h = builtin(name);
        const auto d = dual_hopf(h);
        CHECK(verify_axioms(*d).passed());
        const auto dd = dual_hopf(*d);
        CHECK(approx_equal(dd->mult(), h.mult(), 0.0));
        CHECK(approx_equal(dd->comult(), h.comult(), 0.0));
        CHECK(approx_equal(dd->unit(), h.unit(), 0.0));
        CHECK(approx_equal(dd->counit(), h.counit(), 0.0));
        CHECK(approx_equal(dd->antipode(), h.antipode(), 0.0));
        CHECK(approx_equal(dd->star(), h.star(), 0.0));
    }
}

TEST_CASE("dual of C(G) multiplies like C[G]") {
    const auto d = dual_hopf(builtin("fn:S3"));
    const auto g = oracle::s3_table();
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t k = 0; k < 6; ++k)
                CHECK(d->mult()(a, b, k).is_zero(0.0) == (g[a][b] != k));
}

TEST_CASE("abelianization dimension counts one-dimensional representations") {
    const std::map<std::string, std::size_t> expected = {
        {"trivial", 1}, {"fn:Z2", 2}, {"fn:S3", 6}, {"grp:S3", 2}, {"kac_paljutkin", 4}};
    for (const auto& [name, dim] : expected) {
        CAPTURE(name);
        const auto ab = abelianization(builtin(name));
        CHECK(ab.quotient->dim() == dim);
        CHECK(ab.ideal_dim + dim == builtin(name).dim());
    }
}

TEST_CASE("Wedderburn blocks of the builtins") {
    const std::map<std::string, std::vector<std::size_t>> expected = {
        {"trivial", {1}},
        {"fn:Z2", {1, 1}},
        {"fn:S3", {1, 1, 1, 1, 1, 1}},
        {"grp:S3", {1, 1, 2}},
        {"kac_paljutkin", {1, 1, 1, 1, 2}},
    };
    for (const auto& [name, dims] : expected) {
        CAPTURE(name);
        const auto h = builtin(name);
        const auto blocks = algebra_blocks(h);
        CHECK(block_dims(blocks) == dims);
        const Tensor W = matrix_unit_basis(blocks);
        CHECK(matrix_rank(W) == h.dim());
        for (const auto& b : blocks)
            for (std::size_t i = 0; i < b.dim; ++i)
                for (std::size_t j = 0; j < b.dim; ++j)
                    for (std::size_t k = 0; k < b.dim; ++k) {
                        const Tensor p = h.product(b.unit(i, j), b.unit(j, k));
                        CHECK(oracle::max_difference(p, b.unit(i, k)) < 1e-9);
                    }
    }
}

TEST_CASE("block decomposition is seed independent") {
    const auto h = builtin("kac_paljutkin");
    const auto a = algebra_blocks(h, 0), b = algebra_blocks(h, 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(oracle::max_difference(a[i].central_idempotent, b[i].central_idempotent) < 1e-9);
}
