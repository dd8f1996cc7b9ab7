#include "itdim/homdim.hpp"

#include <algorithm>
#include <functional>

#include "itdim/errors.hpp"
#include "itdim/lit.hpp"

namespace itdim {

namespace {

int rank_of(PdResult::Kind k) {
    switch (k) {
        case PdResult::Kind::Finite: return 0;
        case PdResult::Kind::AtLeast: return 1;
        case PdResult::Kind::Infinite: return 2;
    }
    return 0;
}

// Searches the explored part of the syzygy graph for a cycle reachable from
// root; returns it in traversal order.
std::vector<IsoClassId> find_cycle(IsoClassId root, const std::map<IsoClassId, std::vector<IsoClassId>>& edges) {
    std::map<IsoClassId, int> colour;  // 0 new, 1 on stack, 2 done
    std::vector<IsoClassId> stack;
    std::vector<IsoClassId> cycle;
    std::function<bool(IsoClassId)> dfs = [&](IsoClassId u) -> bool {
        colour[u] = 1;
        stack.push_back(u);
        auto it = edges.find(u);
        if (it != edges.end())
            for (IsoClassId w : it->second) {
                if (colour[w] == 1) {
                    auto pos = std::find(stack.begin(), stack.end(), w);
                    cycle.assign(pos, stack.end());
                    return true;
                }
                if (colour[w] == 0 && dfs(w)) return true;
            }
        stack.pop_back();
        colour[u] = 2;
        return false;
    };
    dfs(root);
    return cycle;
}

}  // namespace

PdResult pd_join(const PdResult& a, const PdResult& b) {
    if (rank_of(a.kind) != rank_of(b.kind)) return rank_of(a.kind) > rank_of(b.kind) ? a : b;
    if (a.kind == PdResult::Kind::Infinite) return a;
    return a.value >= b.value ? a : b;
}

PdResult pd_class(Session& s, IsoClassId root, int cutoff) {
    auto& memo = s.pd_memo();
    if (auto it = memo.find(root); it != memo.end()) return it->second;

    std::map<IsoClassId, int> depth{{root, 0}};
    std::map<IsoClassId, std::vector<IsoClassId>> edges;
    std::vector<IsoClassId> queue{root};
    bool frontier = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const IsoClassId c = queue[head];
        if (s.is_projective(c)) continue;
        if (depth[c] >= cutoff) {
            frontier = true;
            continue;
        }
        std::vector<IsoClassId>& out = edges[c];
        for (const auto& [child, k] : s.syzygy(c)) {
            (void)k;
            out.push_back(child);
            if (depth.emplace(child, depth[c] + 1).second) queue.push_back(child);
        }
    }
    auto cycle = find_cycle(root, edges);
    if (!cycle.empty()) {
        PdResult r = PdResult::infinite(std::move(cycle));
        memo.emplace(root, r);
        return r;
    }
    if (frontier) return PdResult::at_least(cutoff);

    // Acyclic and fully expanded: longest path to a projective.
    std::map<IsoClassId, int> longest;
    std::function<int(IsoClassId)> eval = [&](IsoClassId u) -> int {
        if (auto it = longest.find(u); it != longest.end()) return it->second;
        int best = 0;
        if (!s.is_projective(u))
            for (IsoClassId w : edges[u]) best = std::max(best, eval(w) + 1);
        longest.emplace(u, best);
        return best;
    };
    const int value = eval(root);
    for (const auto& [id, v] : longest) memo.emplace(id, PdResult::finite(v));
    return PdResult::finite(value);
}

PdResult pd(Session& s, const Multiset& ms, int cutoff) {
    PdResult acc = PdResult::finite(0);
    for (const auto& [id, k] : ms) {
        (void)k;
        acc = pd_join(acc, pd_class(s, id, cutoff));
    }
    return acc;
}

PdResult pd(Session& s, const Rep& m, int cutoff) { return pd(s, s.intern(m), cutoff); }

int findim_classes(Session& s, const std::set<IsoClassId>& ids, int cutoff) {
    int best = 0;
    for (IsoClassId id : ids) {
        const PdResult r = pd_class(s, id, cutoff);
        if (r.kind == PdResult::Kind::AtLeast)
            throw Error(ErrorCode::PdUndetermined, "pd of class " + s.registry().label(id) +
                                                       " is at least the cutoff " + std::to_string(cutoff));
        if (r.kind == PdResult::Kind::Finite) best = std::max(best, r.value);
    }
    return best;
}

int findim_add(Session& s, const Rep& m, int cutoff) {
    std::set<IsoClassId> ids;
    for (const auto& [id, k] : s.intern(m)) {
        (void)k;
        ids.insert(id);
    }
    return findim_classes(s, ids, cutoff);
}

PdResult injdim(Session& s, const Rep& m, int cutoff) {
    Session& op = s.opposite();
    return pd(op, dual(m, op.algebra()), cutoff);
}

PdResult resdim_in_D(Session& s, const Multiset& ms, const DClass& d, int cutoff) {
    std::set<IsoClassId> cur;
    for (const auto& [id, k] : ms) {
        (void)k;
        cur.insert(id);
    }
    std::vector<std::set<IsoClassId>> seen;
    for (int k = 0; k <= cutoff; ++k) {
        if (std::all_of(cur.begin(), cur.end(), [&](IsoClassId id) { return d.contains(s.registry(), id); }))
            return PdResult::finite(k);
        // A repeated class set means the sequence is periodic and never enters D.
        if (std::find(seen.begin(), seen.end(), cur) != seen.end()) break;
        seen.push_back(cur);
        std::set<IsoClassId> next;
        for (IsoClassId id : cur)
            for (const auto& [child, c] : s.syzygy(id)) {
                (void)c;
                next.insert(child);
            }
        cur = std::move(next);
    }
    return PdResult::at_least(cutoff);
}

PdResult resdim_in_D(Session& s, const Rep& m, const DClass& d, int cutoff) {
    return resdim_in_D(s, s.intern(m), d, cutoff);
}

bool ext_window_zero(const Rep& m, const Rep& n, int lo, int hi, int cutoff) {
    if (lo < 1) throw Error(ErrorCode::InvalidArgument, "ext window must start at degree >= 1");
    if (hi < lo) return true;
    const auto dims = ext_dims(m, n, hi, cutoff);
    for (int i = lo; i <= hi; ++i)
        if (dims[i] != 0) return false;
    return true;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict CotiltingReport::overall() const {
    const Verdict all[] = {finite_injdim, self_orthogonal, injectives_resolved};
    if (std::any_of(std::begin(all), std::end(all), [](Verdict v) { return v == Verdict::Fail; })) return Verdict::Fail;
    if (std::all_of(std::begin(all), std::end(all), [](Verdict v) { return v == Verdict::Pass; })) return Verdict::Pass;
    return Verdict::Inconclusive;
}

CotiltingReport check_cotilting(Session& s, const Rep& t, int cutoff) {
    CotiltingReport r;
    r.injdim = injdim(s, t, cutoff);
    switch (r.injdim.kind) {
        case PdResult::Kind::Finite: r.finite_injdim = Verdict::Pass; break;
        case PdResult::Kind::Infinite: r.finite_injdim = Verdict::Fail; break;
        case PdResult::Kind::AtLeast: r.finite_injdim = Verdict::Inconclusive; break;
    }
    // Ext^i(T, T) vanishes automatically above id T, so a finite id closes the window.
    const int window_cap = std::max(1, cutoff - 1);
    const int hi = r.injdim.is_finite() ? std::min(window_cap, std::max(1, r.injdim.value))
                                        : std::min(window_cap, s.config().ext_window);
    r.ext_checked_up_to = hi;
    if (!ext_window_zero(t, t, 1, hi, cutoff))
        r.self_orthogonal = Verdict::Fail;
    else
        r.self_orthogonal = r.injdim.is_finite() ? Verdict::Pass : Verdict::Inconclusive;

    const Multiset t_classes = s.intern(t);
    std::vector<IsoClassId> t_ids;
    for (const auto& [id, k] : t_classes) {
        (void)k;
        t_ids.push_back(id);
    }
    auto in_add_t = [&](const Multiset& ms) {
        return std::all_of(ms.begin(), ms.end(), [&](const auto& e) {
            return std::find(t_ids.begin(), t_ids.end(), e.first) != t_ids.end();
        });
    };
    // A cotilting T of injective dimension r resolves every injective in at
    // most r steps; without finite id T there is no length to aim for.
    if (!r.injdim.is_finite()) {
        r.injectives_resolved = Verdict::Inconclusive;
        r.resolution_lengths.assign(static_cast<std::size_t>(s.algebra()->vertices()), -1);
        return r;
    }
    const int max_steps = std::min(cutoff, r.injdim.value + 1);
    r.injectives_resolved = Verdict::Pass;
    for (int v = 0; v < s.algebra()->vertices(); ++v) {
        Rep cur = s.injective(v);
        int length = -1;
        bool failed = false;
        for (int step = 0; step <= max_steps; ++step) {
            const Multiset cls = s.intern(cur);
            if (in_add_t(cls)) {
                length = step;
                break;
            }
            const Approximation a = minimal_right_approximation(s, t_ids, cur);
            if (!a.surjective) {
                failed = true;
                break;
            }
            cur = a.kernel.module;
            if (cur.is_zero()) {
                length = step;
                break;
            }
        }
        r.resolution_lengths.push_back(length);
        if (failed)
            r.injectives_resolved = Verdict::Fail;
        else if (length < 0 && r.injectives_resolved == Verdict::Pass)
            r.injectives_resolved = Verdict::Inconclusive;
    }
    return r;
}

}  // namespace itdim
