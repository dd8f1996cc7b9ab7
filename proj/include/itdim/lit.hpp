#pragma once

// Right approximations, module corpora, (n, V, D)-LIT certificates with the
// finitistic-dimension bound, and the inequality harness.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "itdim/homdim.hpp"

namespace itdim {

struct Approximation {
    /// Interned classes of the source, one entry per copy used.
    std::vector<IsoClassId> source_copies;
    Rep source;
    RepMap map;  ///< source -> target
    bool surjective = false;
    Submodule kernel;
};

/// Evaluation map ⊕_{f ∈ Hom(w, m)} w -> m with its kernel.
Approximation right_approximation(const Rep& w, const Rep& m);

/// Evaluation map from copies of the indecomposable classes w_classes, pruned
/// greedily until no copy can be dropped without losing the approximation
/// property. The result is a right add(W)-approximation of m.
Approximation minimal_right_approximation(Session& s, const std::vector<IsoClassId>& w_classes, const Rep& m);

struct CorpusEntry {
    std::string name;
    Rep module;
    Multiset classes;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    /// True when the entries cover every indecomposable class.
    bool complete = false;
    std::string completeness_reason;

    std::set<IsoClassId> class_set() const;
};

/// Simples, projectives, injectives and radicals of projectives, then the
/// user modules. Nakayama algebras also get every uniserial P_v / J^k P_v and
/// the corpus is marked complete. Entries with equal class multisets are
/// merged.
Corpus standard_corpus(Session& s, const std::vector<std::pair<std::string, Rep>>& user = {});

enum class SequenceKind { InAdd, ProjectiveCover, Approximation, None };
const char* sequence_kind_name(SequenceKind k);

/// One exact sequence 0 -> X1 -> X0 -> N -> 0 for an indecomposable N.
struct ClassSequence {
    IsoClassId target = -1;
    SequenceKind kind = SequenceKind::None;
    Multiset x0, x1;
    bool verified = false;
};

struct ConditionB {
    Verdict verdict = Verdict::Inconclusive;  ///< Pass means Certified
    Multiset target;                          ///< classes of Ω^n m
    std::vector<ClassSequence> sequences;     ///< one per target class
};

/// V, D and the approximating family W for a fixed n.
struct LitSetup {
    int n = 0;
    Multiset v;
    DClass d;
    std::vector<IsoClassId> w_classes;
    bool cap_breached = false;

    bool allowed(const Session& s, IsoClassId id) const;
};

LitSetup make_lit_setup(Session& s, const Rep& v, const DClass& d, int n);
LitSetup make_lit_setup(Session& s, const Multiset& v, const DClass& d, int n);

/// Certificate for one indecomposable already in Ω^n position.
ClassSequence certify_target_class(Session& s, IsoClassId target, const LitSetup& setup);
ConditionB certify_condition_b(Session& s, const Multiset& m, const LitSetup& setup);
ConditionB certify_condition_b(Session& s, const Rep& m, const Rep& v, const DClass& d, int n);

struct LitRecord {
    std::string name;
    ConditionB result;
};

struct LitCertificate {
    LitSetup setup;
    std::vector<LitRecord> records;
    Verdict global = Verdict::Inconclusive;
    bool exhaustive = false;
    std::string scope;  ///< why the certificate is exhaustive, or "corpus-only"
    int condition_a_phi = 0;
    bool condition_a_exact = false;
    int psi_d_v = 0;
};

/// Throws ConditionAViolated when Φ of the D-closure is positive.
LitCertificate certify_lit(Session& s, const Rep& v, const DClass& d, int n, const Corpus& corpus);

/// Ψ_[D](V) + n + 1. Throws InvalidArgument unless the certificate is Certified.
int findim_bound(const LitCertificate& cert);

/// Largest finite pd over the corpus classes; exact when the corpus is complete.
int corpus_findim(Session& s, const Corpus& corpus);

/// A finite stand-in for ⊥T: corpus classes X with Ext^i(X, T) = 0 for
/// 1 ≤ i ≤ window, closed under syzygies.
DClass perp_surrogate(Session& s, const Corpus& corpus, const Rep& t, int window);

struct StatementCheck {
    std::string statement;
    std::string instance;
    bool holds = true;
    bool expected_violation = false;  ///< negative control
    bool informational = false;       ///< recorded, never counted as a failure
    bool inconclusive = false;        ///< an input hit a cutoff; neither pass nor fail
    long long lhs = 0, rhs = 0;
    std::string relation;  ///< "<=", "=", "implies", ...
};

struct VerifyReport {
    std::vector<std::string> d_descriptions;
    std::vector<int> d_phi_dims;
    std::vector<int> d_psi_dims;
    int corpus_findim = 0;
    int corpus_phi_dim = 0;
    int corpus_psi_dim = 0;
    bool corpus_complete = false;
    std::vector<StatementCheck> checks;

    int failures() const;
    int expected_violations() const;
    int inconclusive() const;
};

/// The configured D-classes: add Λ, the closure of each corpus module, and
/// mod Λ when the corpus is complete.
std::vector<DClass> default_d_list(Session& s, const Corpus& corpus);

VerifyReport verify_paper(Session& s, const Corpus& corpus, const std::vector<DClass>& d_list);

}  // namespace itdim
