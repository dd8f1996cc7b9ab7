#include <doctest.h>

#include "itdim/errors.hpp"
#include "itdim/repmod.hpp"
#include "support.hpp"

using namespace itdim;
using testing_support::load;

namespace {
constexpr Residue P = 10007;

Rep sum(const Rep& a, const Rep& b) { return direct_sum(a, b); }
}  // namespace

TEST_CASE("simples projectives injectives") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    CHECK(simple(A, P, 0).dims() == std::vector<int>{1, 0, 0, 0, 0, 0});
    CHECK(projective(A, P, 0).dims() == std::vector<int>{2, 1, 0, 1, 0, 0});
    CHECK(projective(A, P, 0).total_dim() == 4);
    CHECK(injective(A, P, 2).dims() == std::vector<int>{0, 1, 1, 0, 0, 0});

    auto a2 = load("a2.alg");
    CHECK(projective(a2.alg(), P, 0).total_dim() == 2);
    CHECK(projective(a2.alg(), P, 1) == simple(a2.alg(), P, 1));
    CHECK(injective(a2.alg(), P, 0) == simple(a2.alg(), P, 0));

    auto kx = load("kx2.alg");
    CHECK(projective(kx.alg(), P, 0).total_dim() == 2);
    CHECK(injective(kx.alg(), P, 0).total_dim() == 2);
}

TEST_CASE("direct sums") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    CHECK(sum(simple(A, P, 0), simple(A, P, 1)).dims() == std::vector<int>{1, 1, 0, 0, 0, 0});
    CHECK(direct_sum(A, P, std::vector<Rep>{}).is_zero());
    const Rep p1 = projective(A, P, 0);
    CHECK(sum(p1, p1).dims() == std::vector<int>{4, 2, 0, 2, 0, 0});
}

TEST_CASE("radical and quotients") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    const Submodule r = radical(projective(A, P, 0));
    CHECK(r.module.dims() == std::vector<int>{1, 1, 0, 1, 0, 0});
    for (const auto& m : r.module.actions()) CHECK(m.is_zero());
    CHECK(radical(simple(A, P, 3)).module.is_zero());

    MonomialPresentation cube;
    cube.quiver.vertices = 1;
    cube.quiver.arrows = {{"x", 0, 0}};
    cube.relations = {{0, 0, 0}};
    auto c = Algebra::create(cube);
    const Rep pc = projective(c, P, 0);
    CHECK(radical(pc).module.total_dim() == 2);
    CHECK(radical_power(pc, 2).module.total_dim() == 1);
    CHECK(radical_power(pc, 3).module.is_zero());
    const Rep top = quotient(pc, radical(pc).inclusion.blocks);
    CHECK(top == simple(c, P, 0));
    const Rep q2 = quotient(pc, radical_power(pc, 2).inclusion.blocks);
    CHECK(q2.total_dim() == 2);
    CHECK_FALSE(q2.action(0).is_zero());
}

TEST_CASE("projective covers and syzygies") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    const Rep s1 = simple(A, P, 0), s2 = simple(A, P, 1);
    const ProjectiveCover c = projective_cover(s1);
    CHECK(c.summand_vertices == std::vector<int>{0});
    CHECK(is_surjective(s1, c.epi));
    const Rep p2 = projective(A, P, 1);
    const ProjectiveCover cp = projective_cover(p2);
    CHECK(cp.projective == p2);
    CHECK(is_iso_map(cp.epi));
    CHECK(projective_cover(sum(s1, s2)).summand_vertices == std::vector<int>{0, 1});
    CHECK_THROWS_AS(projective_cover(Rep::zero(A, P)), Error);

    CHECK(syzygy(s1).dims() == std::vector<int>{1, 1, 0, 1, 0, 0});
    CHECK(syzygy(s2) == simple(A, P, 2));
    CHECK(syzygy(p2).is_zero());
    CHECK(syzygy_iter(simple(A, P, 3), 2) == simple(A, P, 5));
    CHECK(syzygy_iter(simple(A, P, 3), 3).is_zero());
    // Ω(S1 + S2 + S4) = (S1 + S2 + S4) + S3 + S5
    CHECK(syzygy_iter(s1, 2).dims() == std::vector<int>{1, 1, 1, 1, 1, 0});
}

TEST_CASE("hom and ext") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    const Rep s1 = simple(A, P, 0), s2 = simple(A, P, 1), s3 = simple(A, P, 2);
    CHECK(hom_dim(s1, s1) == 1);
    CHECK(hom_dim(s2, s1) == 0);
    CHECK(hom_dim(projective(A, P, 0), s1) == 1);
    CHECK(ext_dim(s2, s3, 1, 64) == 1);
    CHECK(ext_dim(s1, s1, 1, 64) == 1);
    CHECK(ext_dim(projective(A, P, 0), s1, 1, 64) == 0);
    CHECK(ext_dim(s1, s2, 0, 64) == hom_dim(s1, s2));
    CHECK(ext1_dim_via_syzygy(s2, s3) == 1);
    CHECK(ext1_dim_via_syzygy(s1, s1) == ext_dim(s1, s1, 1, 64));
    CHECK_THROWS_AS(ext_dim(s1, s1, 10, 4), Error);

    auto a2 = load("a2.alg");
    CHECK(hom_dim(simple(a2.alg(), P, 0), simple(a2.alg(), P, 1)) == 0);
}

TEST_CASE("duality") {
    auto f = load("loop6.alg");
    const auto& A = f.alg();
    for (int v = 0; v < 6; ++v) {
        const Rep ds = dual(simple(A, P, v));
        CHECK(ds.dims() == simple(A, P, v).dims());
        CHECK(ds.algebra()->presentation() == opposite(A->presentation()));
        const Rep dp = dual(projective(A, P, v));
        CHECK(dp.dims() == injective(ds.algebra(), P, v).dims());
        CHECK(socle_dims(dp) == simple(A, P, v).dims());
    }
    CHECK(dual(Rep::zero(A, P)).is_zero());
}

TEST_CASE("maps") {
    auto f = load("a2.alg");
    const auto& A = f.alg();
    const Rep p1 = projective(A, P, 0);
    CHECK(intertwines(p1, p1, identity_map(p1)));
    const RepMap z = zero_map(p1, p1);
    CHECK(intertwines(p1, p1, z));
    CHECK_FALSE(is_iso_map(z));
    CHECK(is_iso_map(compose(identity_map(p1), identity_map(p1))));
    CHECK(hom_basis(p1, p1).size() == 1);
    // the radical of P1 is S2 = P2 and includes into P1
    CHECK(hom_dim(projective(A, P, 1), p1) == 1);
    CHECK(hom_dim(p1, projective(A, P, 1)) == 0);
}

TEST_CASE("relations are enforced on module literals") {
    auto f = load("kx2.alg");
    const auto& A = f.alg();
    CHECK_THROWS_AS(Rep(A, P, {1}, {FpMatrix::from_rows({{1}}, P)}), Error);
    CHECK_NOTHROW(Rep(A, P, {2}, {FpMatrix::from_rows({{0, 0}, {1, 0}}, P)}));
}

namespace {

// Hom dimension straight from the intertwining equations f_t M_a = N_a f_s.
int hom_dim_naive(const Rep& m, const Rep& n) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<int> offset(q.vertices + 1, 0);
    for (int v = 0; v < q.vertices; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    const int vars = offset.back();
    if (vars == 0) return 0;
    std::vector<std::vector<long long>> rows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        const FpMatrix& ma = m.action(static_cast<int>(a));
        const FpMatrix& na = n.action(static_cast<int>(a));
        for (int i = 0; i < n.dim(t); ++i)
            for (int j = 0; j < m.dim(s); ++j) {
                std::vector<long long> row(vars, 0);
                for (int k = 0; k < m.dim(t); ++k) row[offset[t] + i * m.dim(t) + k] += ma(k, j);
                for (int k = 0; k < n.dim(s); ++k) row[offset[s] + k * m.dim(s) + j] -= na(i, k);
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return vars;
    return vars - rank_ff(FpMatrix::from_rows(rows, m.prime()));
}

}  // namespace

TEST_CASE("hom basis agrees with the intertwining equations") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = testing_support::from_presentation(testing_support::random_monomial(rng, 4, 5));
        const auto& A = f.alg();
        std::vector<Rep> ms;
        for (int v = 0; v < A->vertices(); ++v) {
            ms.push_back(simple(A, P, v));
            ms.push_back(projective(A, P, v));
            ms.push_back(injective(A, P, v));
            const Rep pv = projective(A, P, v);
            if (!radical(pv).module.is_zero()) ms.push_back(radical(pv).module);
        }
        ms.push_back(sum(ms[0], ms.back()));
        for (const Rep& m : ms)
            for (const Rep& n : ms) {
                const auto basis = hom_basis(m, n);
                CHECK(static_cast<int>(basis.size()) == hom_dim_naive(m, n));
                for (const RepMap& g : basis) CHECK(intertwines(m, n, g));
            }
    }
}
