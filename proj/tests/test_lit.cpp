#include <doctest.h>

#include "itdim/errors.hpp"
#include "itdim/lit.hpp"
#include "support.hpp"

using namespace itdim;
using testing_support::load;

TEST_CASE("right approximations") {
    auto f = load("loop6.alg");
    Session& s = f.s();
    const Rep s1 = s.simple(0);
    const Approximation a = right_approximation(s.regular(), s1);
    CHECK(a.surjective);
    CHECK(a.kernel.module.total_dim() == a.source.total_dim() - 1);
    const Approximation z = right_approximation(s.simple(1), s1);
    CHECK_FALSE(z.surjective);
    CHECK(z.source.is_zero());
    const Approximation id = right_approximation(s1, s1);
    CHECK(id.surjective);
    CHECK(id.kernel.module.is_zero());
}

TEST_CASE("minimal approximation drops redundant copies") {
    auto f = load("loop6.alg");
    Session& s = f.s();
    std::vector<IsoClassId> w;
    for (int v = 0; v < 6; ++v) w.push_back(s.projective_class(v));
    const Approximation a = minimal_right_approximation(s, w, s.simple(0));
    CHECK(a.surjective);
    REQUIRE(a.source_copies.size() == 1);
    CHECK(a.source_copies[0] == s.projective_class(0));
    CHECK(s.intern(a.kernel.module) == s.intern(syzygy(s.simple(0))));
}

TEST_CASE("standard corpus") {
    auto f = load("loop6.alg");
    const Corpus c = standard_corpus(f.s(), f.file.modules);
    CHECK_FALSE(c.complete);
    bool has_x = false;
    for (const auto& e : c.entries) has_x |= e.name == "X";
    CHECK(has_x);
    CHECK(corpus_findim(f.s(), c) == 3);

    auto n = load("nakayama3.alg");
    const Corpus cn = standard_corpus(n.s());
    CHECK(cn.complete);
    CHECK(corpus_findim(n.s(), cn) == 0);
}

TEST_CASE("condition (b)") {
    auto f = load("loop6.alg");
    Session& s = f.s();
    const DClass p = projectives_only(s);
    const ConditionB none = certify_condition_b(s, s.simple(0), s.zero(), p, 0);
    CHECK(none.verdict == Verdict::Inconclusive);

    const Rep v = direct_sum(s.regular(), f.module("simple(*)"));
    for (int i = 0; i < 6; ++i) {
        const ConditionB b = certify_condition_b(s, s.simple(i), v, p, 1);
        CHECK(b.verdict == Verdict::Pass);
        for (const auto& seq : b.sequences) CHECK(seq.verified);
    }

    auto k = load("kx2.alg");
    const Corpus ck = standard_corpus(k.s());
    const DClass all = all_modules(k.s(), ck.class_set());
    const ConditionB kb = certify_condition_b(k.s(), k.s().simple(0), k.s().zero(), all, 0);
    CHECK(kb.verdict == Verdict::Pass);
}

TEST_CASE("LIT certificates and bounds") {
    auto k = load("kx2.alg");
    const Corpus ck = standard_corpus(k.s());
    const LitCertificate ck_cert = certify_lit(k.s(), k.s().zero(), all_modules(k.s(), ck.class_set()), 0, ck);
    CHECK(ck_cert.global == Verdict::Pass);
    CHECK(ck_cert.exhaustive);
    CHECK(findim_bound(ck_cert) == 1);
    CHECK(corpus_findim(k.s(), ck) <= findim_bound(ck_cert));

    auto f = load("loop6.alg");
    Session& s = f.s();
    const Corpus c = standard_corpus(s, f.file.modules);
    const Rep v = f.module("simple(1)+simple(2)+simple(4)+simple(5)");
    const LitCertificate cert = certify_lit(s, v, projectives_only(s), 1, c);
    CHECK(cert.global == Verdict::Pass);
    CHECK(cert.exhaustive);
    CHECK(findim_bound(cert) == psi(s, v) + 2);
    CHECK(corpus_findim(s, c) <= findim_bound(cert));

    const LitCertificate weak = certify_lit(s, s.zero(), projectives_only(s), 0, c);
    CHECK(weak.global == Verdict::Inconclusive);
    CHECK_THROWS_AS(findim_bound(weak), Error);

    const DClass bad = d_closure(s, {s.simple(3)}, 1024);
    try {
        certify_lit(s, s.zero(), bad, 0, c);
        FAIL("expected ConditionAViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConditionAViolated);
    }
}

TEST_CASE("perp surrogate over a self-injective algebra") {
    auto k = load("kx2.alg");
    const Corpus ck = standard_corpus(k.s());
    const DClass perp = perp_surrogate(k.s(), ck, k.s().regular(), 5);
    CHECK(perp.contains(k.s().registry(), k.s().simple_class(0)));
}

TEST_CASE("verify harness on small algebras") {
    for (const char* name : {"a2.alg", "kx2.alg", "nakayama3.alg"}) {
        auto f = load(name);
        const Corpus c = standard_corpus(f.s(), f.file.modules);
        const VerifyReport r = verify_paper(f.s(), c, default_d_list(f.s(), c));
        INFO(name);
        CHECK(r.failures() == 0);
        CHECK(r.expected_violations() == 0);
        CHECK(r.checks.size() > 10);
    }
}

TEST_CASE("verify harness flags the negative control") {
    auto f = load("loop6.alg");
    const Corpus c = standard_corpus(f.s(), f.file.modules);
    const VerifyReport r = verify_paper(f.s(), c, default_d_list(f.s(), c));
    CHECK(r.failures() == 0);
    CHECK(r.expected_violations() >= 1);
    bool found = false;
    for (const auto& ch : r.checks)
        if (ch.expected_violation && ch.instance.find("X") != std::string::npos && ch.lhs == 3 && ch.rhs == 2)
            found = true;
    CHECK(found);
}
