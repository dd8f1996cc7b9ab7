#include <doctest.h>

#include "itdim/krull_schmidt.hpp"
#include "itdim/session.hpp"
#include "support.hpp"

using namespace itdim;
using testing_support::load;

namespace {
constexpr Residue P = 10007;
}

TEST_CASE("decompose") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    std::mt19937_64 rng(3);
    const auto parts = decompose(direct_sum(projective(A, P, 0), simple(A, P, 0)), rng);
    REQUIRE(parts.size() == 2);
    const auto rad = decompose(radical(projective(A, P, 0)).module, rng);
    REQUIRE(rad.size() == 3);
    for (const auto& r : rad) CHECK(r.total_dim() == 1);

    auto k = load("kx2.alg");
    const Rep pk = projective(k.alg(), P, 0);
    const auto one = decompose(pk, rng);
    REQUIRE(one.size() == 1);
    CHECK(endomorphism_info(pk).basis.size() == 2);
    CHECK(endomorphism_info(pk).radical_dim == 1);
}

TEST_CASE("decompose a scrambled sum") {
    auto f = load("nakayama3.alg");
    const auto& A = f.alg();
    // P1 + S1 conjugated by a random change of basis at vertex 1
    const Rep m = direct_sum(projective(A, P, 0), simple(A, P, 0));
    std::mt19937_64 rng(11);
    FpMatrix g;
    do g = random_matrix(m.dim(0), m.dim(0), P, rng);
    while (!is_invertible(g));
    std::vector<FpMatrix> act;
    for (int a = 0; a < A->arrow_count(); ++a) {
        FpMatrix x = m.action(a);
        const Arrow& ar = A->quiver().arrows[a];
        if (ar.source == 0) x = x * *inverse(g);
        if (ar.target == 0) x = g * x;
        act.push_back(x);
    }
    const Rep scrambled(A, P, m.dims(), act);
    Session s(A, {});
    const Multiset ms = s.intern(scrambled);
    CHECK(ms.size() == 2);
    CHECK(ms == add_multisets(s.intern(projective(A, P, 0)), s.intern(simple(A, P, 0))));
}

TEST_CASE("iso") {
    auto f = load("a2.alg");
    const auto& A = f.alg();
    std::mt19937_64 rng(5);
    const Rep s1 = simple(A, P, 0);
    const IsoResult r = is_iso(s1, s1, rng, 8);
    CHECK(r.verdict == IsoVerdict::Yes);
    REQUIRE(r.witness);
    CHECK(is_iso_map(*r.witness));
    CHECK(is_iso(s1, simple(A, P, 1), rng, 8).verdict == IsoVerdict::No);
    const Rep lit(A, P, {1, 1}, {FpMatrix::from_rows({{1}}, P)});
    CHECK(is_iso(projective(A, P, 0), lit, rng, 8).verdict == IsoVerdict::Yes);
    const Rep lit3(A, P, {1, 1}, {FpMatrix::from_rows({{3}}, P)});
    CHECK(is_iso(lit, lit3, rng, 1, true).verdict == IsoVerdict::Yes);
}

TEST_CASE("registry") {
    auto f = load("loop6.alg");
    Session& s = f.s();
    const auto& A = f.alg();
    const Rep s1 = simple(A, P, 0);
    const Multiset twice = s.intern(direct_sum(s1, s1));
    REQUIRE(twice.size() == 1);
    CHECK(twice[0].second == 2);
    CHECK(twice[0].first == s.simple_class(0));
    CHECK(s.intern(s.zero()).empty());

    const Multiset om = s.intern(syzygy(direct_sum(s1, simple(A, P, 1))));
    const Multiset expect = {{s.simple_class(0), 1}, {s.simple_class(1), 1}, {s.simple_class(2), 1},
                             {s.simple_class(3), 1}};
    Multiset sorted = expect;
    std::sort(sorted.begin(), sorted.end());
    CHECK(om == sorted);
    CHECK(s.simple_class(2) == s.projective_class(2));
    CHECK(s.is_projective(s.simple_class(5)));
    CHECK(s.registry().label(s.simple_class(2)).find("S3") != std::string::npos);
    CHECK(s.registry().label(s.simple_class(2)).find("P3") != std::string::npos);

    // Ω of a class is memoized and matches the module-level syzygy
    const Multiset& o1 = s.syzygy(s.simple_class(0));
    CHECK(o1 == s.intern(syzygy(s1)));
}

TEST_CASE("fingerprints separate simples") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    CHECK(fingerprint(simple(A, P, 0)) != fingerprint(simple(A, P, 1)));
    CHECK(fingerprint(projective(A, P, 0)) == fingerprint(projective(A, P, 0)));
}
