#include "qtrans/examples/builtins.hpp"
#include "qtrans/hopf/axioms.hpp"

#include <doctest.h>

#include "support/oracles.hpp"

using namespace qtrans;

TEST_CASE("group tables") {
    CHECK(cyclic_group(4).inverse == std::vector<std::size_t>{0, 3, 2, 1});
    CHECK(klein_four_group().inverse == std::vector<std::size_t>{0, 1, 2, 3});
    const auto s3 = symmetric_group_3();
    CHECK(s3.table == oracle::s3_table());
    CHECK(s3.inverse == std::vector<std::size_t>{0, 1, 2, 3, 5, 4});
    CHECK_THROWS_AS(make_group_table("bad", {"a", "b"}, {{0, 0}, {0, 0}}), InvalidTable);
    CHECK_THROWS_AS(make_group_table("bad", {"a"}, {{0, 0}, {1, 0}}), InvalidTable);
    CHECK_THROWS_AS(cyclic_group(0), InvalidTable);
}

TEST_CASE("builtin catalogue") {
    const auto names = builtin_names();
    CHECK(names.size() == 14);
    for (const auto& n : names) {
        CAPTURE(n);
        const auto h = builtin(n);
        CHECK(verify_axioms(h).passed());
    }
    CHECK(builtin("kac_paljutkin").dim() == 8);
    CHECK(builtin("fn:Z2").dim() == 2);
    CHECK(builtin("grp:S3").basis_names()[4] == "u_(012)");
    CHECK_THROWS_AS(builtin("fn:Z7"), Error);
    CHECK_THROWS_AS(builtin("nothing"), Error);
}

TEST_CASE("Kac-Paljutkin is neither commutative nor cocommutative") {
    const auto h = builtin("kac_paljutkin");
    bool commutative = true, cocommutative = true;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t k = 0; k < 8; ++k) {
                commutative = commutative && (h.mult()(i, j, k) - h.mult()(j, i, k)).is_zero(0.0);
                cocommutative = cocommutative && (h.comult()(i, j, k) - h.comult()(i, k, j)).is_zero(0.0);
            }
    CHECK(!commutative);
    CHECK(!cocommutative);
}
