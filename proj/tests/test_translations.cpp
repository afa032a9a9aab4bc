#include "qtrans/characters/characters.hpp"
#include "qtrans/examples/builtins.hpp"
#include "qtrans/haar/haar.hpp"
#include "qtrans/hopf/dual.hpp"
#include "qtrans/num/linalg.hpp"
#include "qtrans/translations/classification.hpp"
#include "qtrans/translations/isomorphism.hpp"
#include "qtrans/translations/translations.hpp"

#include <doctest.h>

#include "support/oracles.hpp"

#include <map>

using namespace qtrans;

namespace {

const std::map<std::string, std::size_t> kCounts = {
    {"trivial", 1}, {"fn:Z2", 2}, {"fn:S3", 6}, {"grp:S3", 2}, {"kac_paljutkin", 4}};

}  // namespace

TEST_CASE("translation counts of C(G) match the map-enumeration oracle") {
    for (const char* name : {"fn:Z2", "fn:Z3", "fn:Z4", "fn:Z2xZ2", "fn:S3"}) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto m = enumerate_translations(h);
        CHECK(m.elements.size() == oracle::function_algebra_translation_count(*h));
        CHECK(brute_force_translations(h).matrices.size() == m.elements.size());
    }
}

TEST_CASE("translation counts of the core builtins") {
    for (const auto& [name, count] : kCounts) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto m = enumerate_translations(h);
        CHECK(m.elements.size() == count);
        const auto brute = brute_force_translations(h);
        CHECK(brute.matrices.size() == count);
        CHECK(brute.suspicious == 0);
        for (const auto& b : brute.matrices) CHECK(find_translation(m.elements, b, 1e-9).has_value());
    }
}

TEST_CASE("the intertwiner space has dimension dim H and each solution is a convolution operator") {
    for (const auto& [name, count] : kCounts) {
        CAPTURE(name);
        const auto h = builtin(name);
        for (Side side : {Side::Right, Side::Left}) {
            const auto space = comodule_endomorphism_space(h, side);
            CHECK(space.size() == h.dim());
            for (const auto& A : space) {
                const Tensor f = matmul(transpose(A), h.counit());
                CHECK(oracle::max_difference(alpha_matrix(h, f, side), A) <= 1e-9);
            }
        }
    }
}

TEST_CASE("translations of C(S3) are left multiplications") {
    const auto h = share(builtin("fn:S3"));
    const auto g = oracle::s3_table();
    const auto m = enumerate_translations(h);
    std::vector<int> seen(6, 0);
    for (const auto& t : m.elements) {
        // alpha(d_x) = sum over z with y z = x of d_z, for one group element y.
        for (std::size_t y = 0; y < 6; ++y) {
            bool match = true;
            for (std::size_t z = 0; z < 6; ++z)
                for (std::size_t x = 0; x < 6; ++x) {
                    const Scalar expected = g[y][z] == x ? Scalar(1) : Scalar(0);
                    match = match && (t.matrix(z, x) - expected).is_zero(0.0);
                }
            seen[y] += match;
        }
    }
    CHECK(seen == std::vector<int>(6, 1));
}

TEST_CASE("character-translation round trips") {
    for (const auto& name : core_builtins()) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto chars = enumerate_characters(h);
        for (Side side : {Side::Right, Side::Left})
            for (const auto& c : chars) {
                const auto t = alpha_from_char(c, side);
                CHECK(t.certificate.verdict == Verdict::Pass);
                CHECK(approx_equal(char_from_alpha(t).values(), c.values(), 0.0));
            }
    }
}

TEST_CASE("composition laws of both sides") {
    const auto h = share(builtin("kac_paljutkin"));
    const auto chars = enumerate_characters(h);
    for (const auto& a : chars)
        for (const auto& b : chars) {
            const Tensor ab = convolve(a, b).values();
            const Tensor ra = alpha_from_char(a).matrix, rb = alpha_from_char(b).matrix;
            CHECK(oracle::max_difference(alpha_matrix(*h, ab, Side::Right), matmul(rb, ra)) <= 1e-12);
            const Tensor la = alpha_from_char(a, Side::Left).matrix, lb = alpha_from_char(b, Side::Left).matrix;
            CHECK(oracle::max_difference(alpha_matrix(*h, ab, Side::Left), matmul(la, lb)) <= 1e-12);
        }
}

TEST_CASE("non-character functionals do not give translations") {
    const auto h = share(builtin("fn:S3"));
    const auto hs = haar_state(h);
    const auto cert = certify_translation(*h, alpha_matrix(*h, hs.h.values));
    CHECK(cert.intertwining.verdict() == Verdict::Pass);
    CHECK(cert.verdict == Verdict::Fail);
    CHECK_THROWS_AS(alpha_from_functional(hs.h), CertificationFailure);
}

TEST_CASE("classification theorem on the core builtins, both sides, exact and float") {
    for (const auto& [name, count] : kCounts)
        for (Mode mode : {Mode::Exact, Mode::Float})
            for (Side side : {Side::Right, Side::Left}) {
                CAPTURE(name);
                CAPTURE(to_string(side));
                const auto h = share(builtin(name).to_mode(mode));
                const auto rep = verify_classification(h, 0, side);
                CHECK(rep.verdict == Verdict::Pass);
                CHECK(rep.translations == count);
                CHECK(rep.characters == count);
                CHECK(rep.brute_force_count == count);
                CHECK(rep.endomorphism_space_dim == h->dim());
                CHECK(rep.clauses.size() == 5);
                CHECK_NOTHROW(rep.throw_if_violated());
            }
}

TEST_CASE("translation group of C(S3) is S3 under opposite composition") {
    const auto m = enumerate_translations(share(builtin("fn:S3")));
    CHECK(oracle::tables_isomorphic(m.table, oracle::s3_table()));
}

TEST_CASE("inverse translation and Haar invariance") {
    for (const auto& name : core_builtins()) {
        CAPTURE(name);
        const auto h = share(builtin(name));
        const auto hs = haar_state(h);
        for (const auto& t : enumerate_translations(h).elements) {
            const auto inv = inverse(t.matrix);
            REQUIRE(inv);
            const auto s = alpha_from_char(character_inverse(char_from_alpha(t)));
            CHECK(oracle::max_difference(*inv, s.matrix) <= 1e-9);
            CHECK(oracle::max_difference(matmul(transpose(t.matrix), hs.h.values), hs.h.values) <= 1e-9);
        }
    }
}

TEST_CASE("Fourier isomorphism between C(Z2) and C[Z2]") {
    const auto fn = builtin("fn:Z2"), grp = builtin("grp:Z2");
    const auto cert = certify_hopf_isomorphism(fn, grp, oracle::z2_fourier_matrix());
    CHECK(cert.verdict == Verdict::Pass);
    CHECK(cert.invertible);
    const auto found = find_hopf_isomorphism(fn, grp);
    REQUIRE(found);
    CHECK(certify_hopf_isomorphism(fn, grp, *found).verdict == Verdict::Pass);
    CHECK(certify_hopf_isomorphism(fn, grp, Tensor::identity(2)).verdict == Verdict::Fail);
}

TEST_CASE("non-isomorphic algebras are told apart") {
    CHECK(!find_hopf_isomorphism(builtin("fn:S3"), builtin("grp:S3")));
    CHECK(!find_hopf_isomorphism(builtin("fn:Z4"), builtin("fn:Z2xZ2")));
}

TEST_CASE("Kac-Paljutkin is self-dual") {
    const auto kp = builtin("kac_paljutkin");
    const auto d = dual_hopf(kp);
    const auto phi = find_hopf_isomorphism(*d, kp);
    REQUIRE(phi);
    CHECK(certify_hopf_isomorphism(*d, kp, *phi).verdict == Verdict::Pass);
    CHECK(group_likes(kp).size() == 4);
}
