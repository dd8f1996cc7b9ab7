#include "itdim/igusa_todorov.hpp"

#include <algorithm>
#include <atomic>

#include "itdim/errors.hpp"
#include "itdim/homdim.hpp"

namespace itdim {

namespace {

std::atomic<long long> g_reports{0};
std::atomic<long long> g_violations{0};

void add_scaled(KVec& acc, const KVec& v, const BigInt& c) {
    for (const auto& [id, x] : v) {
        BigInt& slot = acc[id];
        slot += c * x;
        if (slot == 0) acc.erase(id);
    }
}

}  // namespace

FittingAudit fitting_audit() { return FittingAudit{g_reports.load(), g_violations.load()}; }

KVec kvec_of(const Multiset& ms) {
    KVec v;
    for (const auto& [id, k] : ms)
        if (k) v[id] = k;
    return v;
}

KVec unit_kvec(IsoClassId id) { return KVec{{id, BigInt(1)}}; }

Multiset multiset_of(const std::set<IsoClassId>& ids) {
    Multiset out;
    for (IsoClassId id : ids) out.emplace_back(id, 1);
    return out;
}

DClass projectives_only(Session& s) {
    DClass d;
    for (int v = 0; v < s.algebra()->vertices(); ++v) d.closure.insert(s.projective_class(v));
    d.description = "add(Λ)";
    return d;
}

DClass all_modules(Session& s, const std::set<IsoClassId>& known) {
    DClass d = projectives_only(s);
    d.closure.insert(known.begin(), known.end());
    d.everything = true;
    d.description = "mod(Λ)";
    return d;
}

DClass d_closure_of_classes(Session& s, const std::vector<IsoClassId>& gens, int cutoff) {
    DClass d = projectives_only(s);
    d.generators = gens;
    std::vector<IsoClassId> work(gens.begin(), gens.end());
    for (IsoClassId g : gens) d.closure.insert(g);
    while (!work.empty()) {
        const IsoClassId id = work.back();
        work.pop_back();
        for (const auto& [child, k] : s.syzygy(id)) {
            (void)k;
            if (d.closure.insert(child).second) work.push_back(child);
        }
        if (static_cast<int>(d.closure.size()) > cutoff)
            throw Error(ErrorCode::ClosureCutoff,
                        "D-closure exceeds " + std::to_string(cutoff) + " indecomposable classes");
    }
    return d;
}

DClass d_closure(Session& s, const std::vector<Rep>& gens, int cutoff) {
    std::set<IsoClassId> ids;
    for (const Rep& g : gens)
        for (const auto& [id, k] : s.intern(g)) {
            (void)k;
            ids.insert(id);
        }
    return d_closure_of_classes(s, std::vector<IsoClassId>(ids.begin(), ids.end()), cutoff);
}

KVec project_kvec(const Session& s, const KVec& v, const DClass& d) {
    KVec out;
    for (const auto& [id, c] : v)
        if (!d.contains(s.registry(), id)) out.emplace(id, c);
    return out;
}

KVec L_bar(Session& s, IsoClassId id, const DClass& d) {
    if (d.contains(s.registry(), id)) return {};
    return project_kvec(s, kvec_of(s.syzygy(id)), d);
}

KVec L_bar(Session& s, const KVec& v, const DClass& d) {
    KVec out;
    for (const auto& [id, c] : v) add_scaled(out, L_bar(s, id, d), c);
    return out;
}

int kvec_rank(const std::vector<KVec>& family) {
    std::map<IsoClassId, int> column;
    for (const auto& v : family)
        for (const auto& [id, c] : v) {
            (void)c;
            column.emplace(id, 0);
        }
    int next = 0;
    for (auto& [id, col] : column) col = next++;
    IntMatrix m(static_cast<int>(family.size()), next);
    for (std::size_t r = 0; r < family.size(); ++r)
        for (const auto& [id, c] : family[r]) m(static_cast<int>(r), column[id]) = c;
    return rank_int(m);
}

FittingReport fitting_eta(Session& s, const std::vector<KVec>& gens, const DClass& d) {
    FittingReport rep;
    std::vector<KVec> cur;
    for (const auto& g : gens) cur.push_back(project_kvec(s, g, d));

    // L̄ acts on the span of the classes reachable from the generators; on
    // that space of dimension N the images are stable from step N on.
    std::set<IsoClassId> reach;
    std::vector<IsoClassId> work;
    for (const auto& v : cur)
        for (const auto& [id, c] : v) {
            (void)c;
            if (reach.insert(id).second) work.push_back(id);
        }
    const std::size_t limit = 64 * static_cast<std::size_t>(s.config().cutoff);
    while (!work.empty()) {
        const IsoClassId id = work.back();
        work.pop_back();
        for (const auto& [child, k] : L_bar(s, id, d)) {
            (void)k;
            if (reach.insert(child).second) work.push_back(child);
        }
        if (reach.size() > limit)
            throw Error(ErrorCode::OrbitCutoff, "more than " + std::to_string(limit) + " classes reachable under syzygy");
    }
    const int horizon = static_cast<int>(reach.size());

    rep.steps.push_back(cur);
    rep.ranks.push_back(kvec_rank(cur));
    for (int k = 0; k < horizon && rep.ranks.back() > 0; ++k) {
        std::vector<KVec> next;
        for (const auto& v : rep.steps.back()) next.push_back(L_bar(s, v, d));
        // A repeated step means the sequence is periodic, hence constant in rank.
        const bool repeats = std::find(rep.steps.begin(), rep.steps.end(), next) != rep.steps.end();
        rep.ranks.push_back(kvec_rank(next));
        rep.steps.push_back(std::move(next));
        if (repeats) break;
    }
    const int stable = rep.ranks.back();
    rep.eta = 0;
    while (rep.ranks[rep.eta] != stable) ++rep.eta;
    std::vector<KVec> confirm;
    for (const auto& v : rep.steps.back()) confirm.push_back(L_bar(s, v, d));
    rep.confirmation_rank = kvec_rank(confirm);

    ++g_reports;
    bool ok = rep.confirmation_rank == stable;
    for (std::size_t i = 1; i < rep.ranks.size(); ++i) ok = ok && rep.ranks[i] <= rep.ranks[i - 1];
    if (!ok) ++g_violations;
    return rep;
}

std::vector<KVec> summand_generators(const Multiset& ms) {
    std::vector<KVec> gens;
    for (const auto& [id, k] : ms) {
        (void)k;
        gens.push_back(unit_kvec(id));
    }
    return gens;
}

int phi_D(Session& s, const Multiset& ms, const DClass& d, FittingReport* report) {
    FittingReport r = fitting_eta(s, summand_generators(ms), d);
    const int eta = r.eta;
    if (report) *report = std::move(r);
    return eta;
}

int phi_D(Session& s, const Rep& m, const DClass& d, FittingReport* report) {
    return phi_D(s, s.intern(m), d, report);
}

std::set<IsoClassId> syzygy_classes(Session& s, const Multiset& ms, int k) {
    std::set<IsoClassId> cur;
    for (const auto& [id, c] : ms) {
        (void)c;
        cur.insert(id);
    }
    for (int i = 0; i < k; ++i) {
        std::set<IsoClassId> next;
        for (IsoClassId id : cur)
            for (const auto& [child, c] : s.syzygy(id)) {
                (void)c;
                next.insert(child);
            }
        cur = std::move(next);
    }
    return cur;
}

Multiset syzygy_multiset(Session& s, const Multiset& ms, int k) {
    Multiset cur = ms;
    for (int i = 0; i < k; ++i) {
        Multiset next;
        for (const auto& [id, c] : cur) {
            Multiset scaled = s.syzygy(id);
            for (auto& [child, m] : scaled) m *= c;
            next = add_multisets(next, scaled);
        }
        cur = std::move(next);
    }
    return cur;
}

int psi_D(Session& s, const Multiset& ms, const DClass& d) {
    const int t = phi_D(s, ms, d);
    return t + findim_classes(s, syzygy_classes(s, ms, t), s.config().cutoff);
}

int psi_D(Session& s, const Rep& m, const DClass& d) { return psi_D(s, s.intern(m), d); }

int phi(Session& s, const Rep& m) { return phi_D(s, m, projectives_only(s)); }
int psi(Session& s, const Rep& m) { return psi_D(s, m, projectives_only(s)); }

int gamma_dim(Session& s, const std::vector<Rep>& ms, ItFunction which, const DClass& d) {
    const DClass p = projectives_only(s);
    int best = 0;
    for (const Rep& m : ms) {
        int value = 0;
        switch (which) {
            case ItFunction::Phi: value = phi_D(s, m, p); break;
            case ItFunction::Psi: value = psi_D(s, m, p); break;
            case ItFunction::PhiD: value = phi_D(s, m, d); break;
            case ItFunction::PsiD: value = psi_D(s, m, d); break;
        }
        best = std::max(best, value);
    }
    return best;
}

int phi_dim_of(Session& s, const DClass& d) {
    return phi_D(s, multiset_of(d.closure), projectives_only(s));
}

int psi_dim_of(Session& s, const DClass& d) {
    return psi_D(s, multiset_of(d.closure), projectives_only(s));
}

}  // namespace itdim
