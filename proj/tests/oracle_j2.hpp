#pragma once

// Brute-force reference for radical-square-zero algebras. Everything here works
// on dimension vectors of semisimple modules: Ω S_v is the sum of S_w over the
// arrows v -> w, and S_v is projective exactly when v is a sink. Ranks are
// taken over the rationals with plain Gaussian elimination.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<long long>;

struct J2Quiver {
    int n = 0;
    std::vector<std::vector<int>> adj;  // adj[v][w] = number of arrows v -> w

    bool sink(int v) const {
        for (int w = 0; w < n; ++w)
            if (adj[v][w]) return false;
        return true;
    }
};

inline J2Quiver make_quiver(int n, const std::vector<std::pair<int, int>>& arrows) {
    J2Quiver q;
    q.n = n;
    q.adj.assign(n, std::vector<int>(n, 0));
    for (auto [s, t] : arrows) ++q.adj[s][t];
    return q;
}

// Ω of a semisimple module given by multiplicities; projective simples map to 0.
inline Vec omega(const J2Quiver& q, const Vec& m) {
    Vec out(q.n, 0);
    for (int v = 0; v < q.n; ++v)
        if (m[v] && !q.sink(v))
            for (int w = 0; w < q.n; ++w) out[w] += m[v] * q.adj[v][w];
    return out;
}

inline Vec omega_iter(const J2Quiver& q, Vec m, int k) {
    for (int i = 0; i < k; ++i) m = omega(q, m);
    return m;
}

// pd S_v from support sets: the support of Ω^k S_v is the set of vertices at
// the end of length-k paths from v. Infinite (nullopt) when a non-sink support
// repeats, which happens exactly when a cycle is reachable.
inline std::optional<int> pd_simple(const J2Quiver& q, int v) {
    std::set<int> support = {v};
    std::vector<std::set<int>> seen;
    for (int k = 0;; ++k) {
        std::set<int> nonsink;
        for (int w : support)
            if (!q.sink(w)) nonsink.insert(w);
        if (nonsink.empty()) return k;
        if (std::find(seen.begin(), seen.end(), nonsink) != seen.end()) return std::nullopt;
        seen.push_back(nonsink);
        std::set<int> next;
        for (int w : nonsink)
            for (int u = 0; u < q.n; ++u)
                if (q.adj[w][u]) next.insert(u);
        support = next;
    }
}

inline int rank_q(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (int k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Φ_D for D generated by the simples in `d_simples` together with the
// projectives. K_D has one coordinate per non-projective simple outside the
// syzygy closure of d_simples.
struct Evaluator {
    J2Quiver q;
    std::vector<bool> in_d;  // non-sink simples in the closure

    Evaluator(J2Quiver quiver, const std::vector<int>& d_simples) : q(std::move(quiver)), in_d(q.n, false) {
        std::vector<int> stack = d_simples;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (in_d[v]) continue;
            in_d[v] = true;
            for (int w = 0; w < q.n; ++w)
                if (q.adj[v][w] && !q.sink(v)) stack.push_back(w);
        }
    }

    bool killed(int v) const { return q.sink(v) || in_d[v]; }

    std::vector<Rational> project(const Vec& m) const {
        std::vector<Rational> out(q.n, 0);
        for (int v = 0; v < q.n; ++v)
            if (!killed(v)) out[v] = m[v];
        return out;
    }

    // Least η with rank L̄^η⟨X⟩ = rank L̄^k⟨X⟩ for all k ≥ η. The rank is
    // constant from step n on, so compare against step n.
    int phi(const Vec& x) const {
        std::vector<Vec> gens;
        for (int v = 0; v < q.n; ++v)
            if (x[v]) {
                Vec e(q.n, 0);
                e[v] = 1;
                gens.push_back(e);
            }
        std::vector<int> ranks;
        for (int k = 0; k <= q.n + 1; ++k) {
            std::vector<std::vector<Rational>> rows;
            for (const Vec& g : gens) rows.push_back(project(g));
            ranks.push_back(rows.empty() ? 0 : rank_q(rows));
            for (Vec& g : gens) {
                Vec h(q.n, 0);
                for (int v = 0; v < q.n; ++v)
                    if (!killed(v) && g[v])
                        for (int w = 0; w < q.n; ++w) h[w] += g[v] * q.adj[v][w];
                g = h;
            }
        }
        const int stable = ranks[q.n];
        int eta = q.n;
        while (eta > 0 && ranks[eta - 1] == stable) --eta;
        return eta;
    }

    int findim_support(const Vec& m) const {
        int best = 0;
        for (int v = 0; v < q.n; ++v)
            if (m[v])
                if (auto p = pd_simple(q, v)) best = std::max(best, *p);
        return best;
    }

    int psi(const Vec& x) const {
        const int f = phi(x);
        return f + findim_support(omega_iter(q, x, f));
    }
};

}  // namespace oracle
