#include <doctest.h>

#include <numeric>
#include <random>

#include "itdim/homdim.hpp"
#include "oracle_j2.hpp"
#include "support.hpp"

using namespace itdim;

namespace {

struct Pair {
    oracle::J2Quiver q;
    testing_support::Fixture f;
};

Pair build(int n, const std::vector<std::pair<int, int>>& arrows) {
    MonomialPresentation pres;
    pres.quiver.vertices = n;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        pres.quiver.arrows.push_back({"a" + std::to_string(i), arrows[i].first, arrows[i].second});
    pres.truncation = 2;
    return {oracle::make_quiver(n, arrows), testing_support::from_presentation(pres)};
}

oracle::Vec unit(int n, int v) {
    oracle::Vec e(n, 0);
    e[v] = 1;
    return e;
}

Rep semisimple(Session& s, const oracle::Vec& m) {
    std::vector<Rep> parts;
    for (int v = 0; v < static_cast<int>(m.size()); ++v)
        for (long long k = 0; k < m[v]; ++k) parts.push_back(s.simple(v));
    return direct_sum(s.algebra(), s.prime(), parts);
}

Multiset classes_of(Session& s, const oracle::Vec& m) {
    Multiset out;
    for (int v = 0; v < static_cast<int>(m.size()); ++v)
        if (m[v]) out.push_back({s.simple_class(v), static_cast<int>(m[v])});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> closure_simples(const oracle::Evaluator& ev) {
    std::vector<int> out;
    for (int v = 0; v < ev.q.n; ++v)
        if (ev.in_d[v]) out.push_back(v);
    return out;
}

// Compares the engine with the oracle on every simple, on sums of simples,
// and for D generated by one simple.
void compare(Pair& p, std::mt19937_64& rng) {
    Session& s = p.f.s();
    const int n = p.q.n;
    const oracle::Evaluator plain(p.q, {});
    for (int v = 0; v < n; ++v) {
        CAPTURE(v);
        const oracle::Vec e = unit(n, v);
        CHECK(s.intern(syzygy(s.simple(v))) == classes_of(s, oracle::omega(p.q, e)));
        const PdResult r = pd(s, s.simple(v), 64);
        const auto expect = oracle::pd_simple(p.q, v);
        if (expect) {
            CHECK(r == PdResult::finite(*expect));
        } else {
            CHECK(r.kind == PdResult::Kind::Infinite);
        }
        CHECK(phi(s, s.simple(v)) == plain.phi(e));
        CHECK(psi(s, s.simple(v)) == plain.psi(e));
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 4; ++t) {
        oracle::Vec x(n, 0);
        for (int k = 0; k < 3; ++k) x[pick(rng)] += 1;
        CAPTURE(t);
        const Rep m = semisimple(s, x);
        CHECK(phi(s, m) == plain.phi(x));
        CHECK(psi(s, m) == plain.psi(x));
        const oracle::Vec o2 = oracle::omega_iter(p.q, x, 2);
        if (std::accumulate(o2.begin(), o2.end(), 0LL) <= 24)
            CHECK(s.intern(syzygy_iter(m, 2)) == classes_of(s, o2));

        const int g = pick(rng);
        const oracle::Evaluator rel(p.q, {g});
        const DClass d = d_closure(s, {s.simple(g)}, 1024);
        for (int w : closure_simples(rel)) CHECK(d.contains(s.registry(), s.simple_class(w)));
        CHECK(phi_D(s, m, d) == rel.phi(x));
        CHECK(psi_D(s, m, d) == rel.psi(x));
    }
}

}  // namespace

TEST_CASE("oracle on the six-vertex loop algebra") {
    // loop 1->1, a 1->2, b 2->3, c 1->4, d 4->5, e 5->6 (0-based below)
    Pair p = build(6, {{0, 0}, {0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}});
    Session& s = p.f.s();
    const oracle::Evaluator plain(p.q, {});
    const oracle::Evaluator rel(p.q, {1});
    oracle::Vec x(6, 0);
    x[0] = x[1] = 1;

    CHECK(plain.phi(x) == 1);
    CHECK(rel.phi(x) == 0);
    CHECK(plain.psi(x) == 3);
    CHECK(rel.psi(x) == 1);
    CHECK(oracle::pd_simple(p.q, 1) == 1);
    CHECK(oracle::pd_simple(p.q, 3) == 2);
    CHECK_FALSE(oracle::pd_simple(p.q, 0).has_value());
    CHECK(oracle::omega(p.q, unit(6, 0)) == oracle::Vec{1, 1, 0, 1, 0, 0});

    const Rep m = semisimple(s, x);
    const DClass d = d_closure(s, {s.regular(), s.simple(1)}, 1024);
    CHECK(phi(s, m) == plain.phi(x));
    CHECK(phi_D(s, m, d) == rel.phi(x));
    CHECK(psi(s, m) == plain.psi(x));
    CHECK(psi_D(s, m, d) == rel.psi(x));
    CHECK(s.intern(syzygy(s.simple(0))) == classes_of(s, oracle::omega(p.q, unit(6, 0))));

    std::mt19937_64 rng(39);
    compare(p, rng);
}

TEST_CASE("oracle on random radical-square-zero quivers") {
    std::mt19937_64 rng(20240601);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> nv(1, 6), na(1, 8);
        const int n = nv(rng);
        const int a = na(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<std::pair<int, int>> arrows;
        for (int i = 0; i < a; ++i) arrows.push_back({pick(rng), pick(rng)});
        Pair p = build(n, arrows);
        CAPTURE(trial);
        compare(p, rng);
        ++compared;
    }
    CHECK(compared == 60);
}
