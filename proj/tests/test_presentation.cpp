#include <doctest.h>

#include "itdim/errors.hpp"
#include "itdim/presentation.hpp"
#include "support.hpp"

using namespace itdim;

namespace {

MonomialPresentation loop_algebra(int power) {
    MonomialPresentation p;
    p.quiver.vertices = 1;
    p.quiver.arrows = {{"x", 0, 0}};
    if (power > 0) p.relations.push_back(std::vector<int>(power, 0));
    return p;
}

MonomialPresentation a2() {
    MonomialPresentation p;
    p.quiver.vertices = 2;
    p.quiver.arrows = {{"a", 0, 1}};
    return p;
}

}  // namespace

TEST_CASE("validate") {
    const auto loop6 = parse_algebra(testing_support::read_data("loop6.alg"));
    CHECK(validate(loop6).dimension == 12);
    CHECK(validate(loop_algebra(2)).dimension == 2);
    CHECK(validate(loop_algebra(3)).dimension == 3);
    try {
        validate(loop_algebra(0));
        FAIL("expected NonAdmissible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonAdmissible);
    }
    MonomialPresentation bad = a2();
    bad.relations.push_back({0});
    CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("path basis") {
    const PathBasis b = path_basis(a2());
    REQUIRE(b.size() == 3);
    CHECK(b.between[0][1].size() == 1);
    CHECK(b.between[1][0].empty());
    const PathBasis c = path_basis(loop_algebra(3));
    REQUIRE(c.size() == 3);
    std::vector<int> lengths;
    for (const auto& p : c.paths) lengths.push_back(p.length());
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{0, 1, 2});
}

TEST_CASE("opposite") {
    const auto op = opposite(a2());
    REQUIRE(op.quiver.arrows.size() == 1);
    CHECK(op.quiver.arrows[0].source == 1);
    CHECK(op.quiver.arrows[0].target == 0);
    CHECK(opposite(loop_algebra(2)) == loop_algebra(2));

    const auto loop6 = parse_algebra(testing_support::read_data("loop6.alg"));
    const auto o = opposite(loop6);
    CHECK(o.truncation == loop6.truncation);
    for (std::size_t i = 0; i < o.quiver.arrows.size(); ++i) {
        CHECK(o.quiver.arrows[i].source == loop6.quiver.arrows[i].target);
        CHECK(o.quiver.arrows[i].target == loop6.quiver.arrows[i].source);
    }
    CHECK(opposite(opposite(loop6)) == loop6);
}

TEST_CASE("algebra tables") {
    auto alg = Algebra::create(loop_algebra(3));
    const int e = alg->vertex_path(0);
    const int x = alg->extend(e, 0);
    REQUIRE(x >= 0);
    const int x2 = alg->extend(x, 0);
    REQUIRE(x2 >= 0);
    CHECK(alg->extend(x2, 0) == -1);
    CHECK(alg->find(0, {0, 0}) == x2);
    CHECK(alg->is_nakayama());
    CHECK_FALSE(alg->radical_square_zero());
    auto j2 = Algebra::create(loop_algebra(2));
    CHECK(j2->radical_square_zero());
}

TEST_CASE("relations with a composable mismatch are rejected") {
    MonomialPresentation p;
    p.quiver.vertices = 3;
    p.quiver.arrows = {{"a", 0, 1}, {"b", 2, 0}};
    p.relations.push_back({0, 1});
    CHECK_THROWS_AS(validate(p), Error);
}
