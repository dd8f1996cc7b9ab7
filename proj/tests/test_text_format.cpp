#include <doctest.h>

#include "itdim/errors.hpp"
#include "itdim/text_format.hpp"
#include "support.hpp"

using namespace itdim;

namespace {
constexpr Residue P = 10007;

ParseError parse_error_of(const std::string& text) {
    try {
        parse_algebra_file(text, P);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}
}  // namespace

TEST_CASE("sample files parse") {
    const AlgebraFile f = parse_algebra_file(testing_support::read_data("loop6.alg"), P);
    CHECK(f.algebra->dimension() == 12);
    CHECK(f.algebra->vertices() == 6);
    REQUIRE(f.modules.size() == 1);
    CHECK(f.modules[0].first == "X");
    CHECK(f.modules[0].second.dims() == std::vector<int>{1, 1, 0, 0, 0, 0});

    const AlgebraFile k = parse_algebra_file("vertices 1; arrow x: 1 -> 1; relations: x.x", P);
    CHECK(k.algebra->dimension() == 2);
    REQUIRE(k.presentation.relations.size() == 1);
    CHECK(k.presentation.relations[0] == std::vector<int>{0, 0});
}

TEST_CASE("module expressions") {
    const AlgebraFile f = parse_algebra_file(testing_support::read_data("loop6.alg"), P);
    const auto& A = f.algebra;
    CHECK(parse_module_expr("simple(*)", A, P).total_dim() == 6);
    CHECK(parse_module_expr("proj(1)", A, P).total_dim() == 4);
    CHECK(parse_module_expr("rad(proj(1))", A, P).dims() == std::vector<int>{1, 1, 0, 1, 0, 0});
    CHECK(parse_module_expr("inj(3)", A, P).dims() == std::vector<int>{0, 1, 1, 0, 0, 0});
    CHECK(parse_module_expr("syz(simple(1))", A, P).dims() == std::vector<int>{1, 1, 0, 1, 0, 0});
    CHECK(parse_module_expr("syz(syz(simple(4)))", A, P).dims() == std::vector<int>{0, 0, 0, 0, 0, 1});
    CHECK(parse_module_expr("zero", A, P).is_zero());
    CHECK(parse_module_expr("X + (X)", A, P, f.modules).total_dim() == 4);

    const AlgebraFile a2 = parse_algebra_file(
        "vertices 2\narrow a: 1 -> 2\nmodule M = module {\n  dims = [1, 1]\n  arrow a = [[-1]]\n}\n", P);
    REQUIRE(a2.modules.size() == 1);
    CHECK(a2.modules[0].second.action(0)(0, 0) == P - 1);
}

TEST_CASE("comments and separators") {
    const AlgebraFile f = parse_algebra_file("# comment\nvertices 2 # trailing\n\narrow a: 1 -> 2; arrow b: 1 -> 2\n", P);
    CHECK(f.algebra->dimension() == 4);
}

TEST_CASE("parse errors carry positions") {
    {
        const ParseError e = parse_error_of("vertices 2\narrow a: 1 -> 2\nrelations: a.q\n");
        CHECK(e.line() == 3);
        CHECK(e.column() > 1);
        CHECK(e.code() == ErrorCode::ParseError);
    }
    {
        const ParseError e = parse_error_of("vertices 2\narrow a: 1 -> 3\n");
        CHECK(e.line() == 2);
    }
    {
        const ParseError e = parse_error_of("vertices two\n");
        CHECK(e.line() == 1);
        CHECK(e.column() == 10);
    }
    {
        const ParseError e = parse_error_of("vertices 1\narrow x: 1 -> 1\nrelations: x.x\nmodule M = simple(2)\n");
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_algebra_file("vertices 1\narrow x: 1 -> 1\n", P), Error);
}

TEST_CASE("module literal checks") {
    CHECK_THROWS_AS(parse_algebra_file("vertices 1; arrow x: 1 -> 1; relations: x.x\n"
                                       "module M = module { dims = [1]; arrow x = [[1]] }",
                                       P),
                    Error);
    CHECK_THROWS_AS(parse_algebra_file("vertices 2; arrow a: 1 -> 2\n"
                                       "module M = module { dims = [1, 1]; arrow a = [[1, 0]] }",
                                       P),
                    Error);
}
