#include <doctest.h>

#include <chrono>
#include <random>

#include "itdim/errors.hpp"
#include "itdim/lit.hpp"
#include "support.hpp"

using namespace itdim;

namespace {

constexpr int kAlgebras = 120;
constexpr std::uint64_t kSeed = 0x5eed5eedULL;

bool cutoff_error(const Error& e) {
    switch (e.code()) {
        case ErrorCode::OrbitCutoff:
        case ErrorCode::PdUndetermined:
        case ErrorCode::ResolutionCutoff:
        case ErrorCode::ClosureCutoff: return true;
        default: return false;
    }
}

std::string describe(const MonomialPresentation& p) {
    std::string s = std::to_string(p.quiver.vertices) + " vertices;";
    for (const auto& a : p.quiver.arrows)
        s += " " + a.name + ":" + std::to_string(a.source + 1) + "->" + std::to_string(a.target + 1);
    s += "; relations";
    for (const auto& r : p.relations) {
        s += " ";
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "." : "") + p.quiver.arrows[r[i]].name;
    }
    return s;
}

// V1 ⊆ V2 and D1 ⊆ D2: a Pass for the smaller data must stay a Pass.
void check_lit_monotone(Session& s, const Corpus& c) {
    const DClass d1 = projectives_only(s);
    std::vector<DClass> bigger = {d1};
    for (int v = 0; v < s.algebra()->vertices(); ++v) {
        try {
            DClass d = d_closure(s, {s.simple(v)}, 16 * s.config().d_cap);
            if (phi_dim_of(s, d) == 0) bigger.push_back(std::move(d));
        } catch (const Error& e) {
            if (!cutoff_error(e)) throw;
        }
    }
    const Rep v1 = s.zero();
    std::vector<Rep> simples;
    for (int v = 0; v < s.algebra()->vertices(); ++v) simples.push_back(s.simple(v));
    const Rep v2 = direct_sum(s.algebra(), s.prime(), simples);
    for (const DClass& d2 : bigger)
        for (int n = 0; n <= 1; ++n)
            for (const auto& e : c.entries) {
                CAPTURE(e.name);
                CAPTURE(d2.description);
                try {
                    const ConditionB small = certify_condition_b(s, e.module, v1, d1, n);
                    const ConditionB mid_v = certify_condition_b(s, e.module, v2, d1, n);
                    const ConditionB mid_d = certify_condition_b(s, e.module, v1, d2, n);
                    const ConditionB big = certify_condition_b(s, e.module, v2, d2, n);
                    for (const ConditionB* b : {&small, &mid_v, &mid_d, &big})
                        for (const auto& seq : b->sequences)
                            if (seq.kind != SequenceKind::None) CHECK(seq.verified);
                    if (small.verdict == Verdict::Pass) {
                        CHECK(mid_v.verdict == Verdict::Pass);
                        CHECK(mid_d.verdict == Verdict::Pass);
                    }
                    if (mid_v.verdict == Verdict::Pass || mid_d.verdict == Verdict::Pass)
                        CHECK(big.verdict == Verdict::Pass);
                } catch (const Error& err) {
                    if (!cutoff_error(err)) throw;
                }
            }
}

// Module-level constructions agree with the class-level registry.
void check_structure(Session& s, const Corpus& c) {
    for (const auto& e : c.entries) {
        CAPTURE(e.name);
        const Rep& m = e.module;
        const Rep re = s.registry().realize(e.classes);
        CHECK(re.dims() == m.dims());
        Multiset om;
        for (const auto& [id, k] : e.classes)
            for (int i = 0; i < k; ++i) om = add_multisets(om, s.syzygy(id));
        CHECK(s.intern(syzygy(m)) == om);
        CHECK(s.intern(dual(dual(m), s.algebra())) == e.classes);
        const int phi_m = phi(s, m);
        CHECK(phi_m >= 0);
        CHECK(psi(s, m) >= phi_m);
    }
}

}  // namespace

TEST_CASE("random monomial algebras") {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kSeed);
    int algebras = 0, checks = 0, negative_controls = 0, inconclusive = 0;
    for (int i = 0; i < kAlgebras; ++i) {
        const MonomialPresentation pres = testing_support::random_monomial(rng);
        REQUIRE(pres.quiver.vertices <= 6);
        REQUIRE(pres.quiver.arrows.size() <= 8);
        for (const auto& r : pres.relations) REQUIRE((r.size() == 2 || r.size() == 3));
        INFO("algebra " << i << ": " << describe(pres));
        SessionConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(i);
        auto f = testing_support::from_presentation(pres, cfg);
        Session& s = f.s();
        const Corpus c = standard_corpus(s);
        const VerifyReport r = verify_paper(s, c, default_d_list(s, c));
        for (const auto& ch : r.checks)
            if (!ch.holds && !ch.expected_violation && !ch.informational && !ch.inconclusive)
                FAIL_CHECK(ch.statement << " [" << ch.instance << "] " << ch.lhs << " " << ch.relation << " "
                                        << ch.rhs);
        CHECK(r.failures() == 0);
        checks += static_cast<int>(r.checks.size());
        negative_controls += r.expected_violations();
        inconclusive += r.inconclusive();
        check_structure(s, c);
        check_lit_monotone(s, c);
        ++algebras;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    MESSAGE(algebras << " algebras, " << checks << " checks, " << negative_controls << " negative controls, "
                     << inconclusive << " inconclusive, " << secs << " s");
    CHECK(algebras >= 100);
    CHECK(secs < 300.0);
    CHECK(fitting_audit().violations == 0);
    CHECK(fitting_audit().reports > 0);
}

TEST_CASE("generator respects its bounds") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto p = testing_support::random_monomial(rng);
        CHECK(p.quiver.vertices >= 1);
        CHECK(p.quiver.vertices <= 6);
        CHECK(p.quiver.arrows.size() <= 8);
        CHECK_NOTHROW(validate(p));
    }
}

TEST_CASE("rank stabilization is confirmed one step later") {
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < 40; ++i) {
        auto f = testing_support::from_presentation(testing_support::random_monomial(rng));
        Session& s = f.s();
        for (int v = 0; v < s.algebra()->vertices(); ++v) {
            FittingReport rep;
            try {
                phi_D(s, s.simple(v), projectives_only(s), &rep);
            } catch (const Error& e) {
                if (!cutoff_error(e)) throw;
                continue;
            }
            for (std::size_t k = 1; k < rep.ranks.size(); ++k) CHECK(rep.ranks[k] <= rep.ranks[k - 1]);
            CHECK(rep.confirmation_rank == rep.ranks.back());
            for (std::size_t k = rep.eta; k < rep.ranks.size(); ++k) CHECK(rep.ranks[k] == rep.ranks.back());
        }
    }
}
