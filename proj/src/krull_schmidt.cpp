#include "itdim/krull_schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "itdim/errors.hpp"

namespace itdim {

namespace {

bool acts_trivially(const Rep& m) {
    return std::all_of(m.actions().begin(), m.actions().end(), [](const FpMatrix& a) { return a.is_zero(); });
}

Residue trace_of_composite(const RepMap& g, const RepMap& f, Residue p) {
    Residue t = 0;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
        const FpMatrix& gv = g.blocks[v];
        const FpMatrix& fv = f.blocks[v];
        std::uint64_t acc = 0;
        for (int a = 0; a < gv.rows(); ++a)
            for (int b = 0; b < gv.cols(); ++b)
                if (gv(a, b) && fv(b, a)) acc = (acc + static_cast<std::uint64_t>(gv(a, b)) * fv(b, a)) % p;
        t = mod_add(t, static_cast<Residue>(acc), p);
    }
    return t;
}

RepMap random_combination(const std::vector<RepMap>& basis, const Rep& dom, const Rep& cod, std::mt19937_64& rng) {
    const Residue p = dom.prime();
    RepMap f = zero_map(dom, cod);
    for (const auto& b : basis) {
        const Residue c = static_cast<Residue>(rng() % p);
        if (c) f = add_maps(f, scale_map(b, c));
    }
    return f;
}

std::vector<Rep> split_semisimple(const Rep& m) {
    std::vector<Rep> out;
    for (int v = 0; v < m.algebra()->vertices(); ++v)
        for (int k = 0; k < m.dim(v); ++k) out.push_back(simple(m.algebra(), m.prime(), v));
    return out;
}

// Groups basis vectors that some arrow matrix links by a nonzero entry. Each
// group spans a submodule, and m is the direct sum of these submodules.
std::vector<Rep> split_by_support(const Rep& m) {
    const int nv = m.algebra()->vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dim(v);
    std::vector<int> parent(offset[nv]);
    for (int i = 0; i < offset[nv]; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < m.algebra()->arrow_count(); ++a) {
        const Arrow& ar = m.algebra()->quiver().arrows[a];
        const FpMatrix& x = m.action(a);
        for (int r = 0; r < x.rows(); ++r)
            for (int c = 0; c < x.cols(); ++c)
                if (x(r, c)) parent[find(offset[ar.target] + r)] = find(offset[ar.source] + c);
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < offset[nv]; ++i) groups[find(i)].push_back(i);
    if (groups.size() <= 1) return {m};
    // Coordinate components: the arrow matrices restrict to submatrices.
    std::vector<Rep> out;
    for (const auto& [root, members] : groups) {
        (void)root;
        std::vector<std::vector<int>> coords(nv);
        for (int i : members) {
            const int v = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), i) - offset.begin()) - 1;
            coords[v].push_back(i - offset[v]);
        }
        std::vector<int> dims;
        for (const auto& c : coords) dims.push_back(static_cast<int>(c.size()));
        std::vector<FpMatrix> action;
        for (int a = 0; a < m.algebra()->arrow_count(); ++a) {
            const Arrow& ar = m.algebra()->quiver().arrows[a];
            const auto& rows = coords[ar.target];
            const auto& cols = coords[ar.source];
            FpMatrix x(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.prime());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    x(static_cast<int>(r), static_cast<int>(c)) = m.action(a)(rows[r], cols[c]);
            action.push_back(std::move(x));
        }
        out.push_back(Rep::unchecked(m.algebra(), m.prime(), std::move(dims), std::move(action)));
    }
    return out;
}

}  // namespace

EndInfo endomorphism_info(const Rep& m) {
    const Residue p = m.prime();
    EndInfo info;
    info.basis = hom_basis(m, m);
    const int e = static_cast<int>(info.basis.size());
    if (static_cast<long long>(p) <= std::max(e, m.total_dim()))
        throw Error(ErrorCode::PrimeTooSmall, "prime " + std::to_string(p) + " does not exceed dim End = " +
                                                  std::to_string(e) + " and dim M = " +
                                                  std::to_string(m.total_dim()));
    FpMatrix gram(e, e, p);
    for (int i = 0; i < e; ++i)
        for (int j = i; j < e; ++j) {
            const Residue t = trace_of_composite(info.basis[i], info.basis[j], p);
            gram(i, j) = t;
            gram(j, i) = t;
        }
    info.radical_dim = e - rank_ff(gram);
    return info;
}

Fingerprint fingerprint(const Rep& m) {
    Fingerprint f;
    f.dims = m.dims();
    f.top = top_dims(m);
    f.socle = socle_dims(m);
    const EndInfo info = endomorphism_info(m);
    f.end_dim = static_cast<int>(info.basis.size());
    f.rad_end_dim = info.radical_dim;
    return f;
}

std::vector<Rep> decompose(const Rep& m, std::mt19937_64& rng, int trial_budget) {
    if (m.is_zero()) return {};
    if (acts_trivially(m)) return split_semisimple(m);
    {
        std::vector<Rep> parts = split_by_support(m);
        if (parts.size() > 1) {
            std::vector<Rep> out;
            for (const Rep& part : parts)
                for (auto& r : decompose(part, rng, trial_budget)) out.push_back(std::move(r));
            return out;
        }
    }
    const EndInfo info = endomorphism_info(m);
    const int residue_dim = static_cast<int>(info.basis.size()) - info.radical_dim;
    if (residue_dim == 1) return {m};

    const Residue p = m.prime();
    const int nv = m.algebra()->vertices();
    for (int trial = 0; trial < trial_budget; ++trial) {
        const RepMap theta = random_combination(info.basis, m, m, rng);
        const FpMatrix full = block_diagonal(theta.blocks, p);
        const auto factors = distinct_irreducible_factors(char_poly(full), p, rng);
        if (factors.size() == 1) {
            // F_p[θ̄] is a field of full dimension inside End/rad: End is local.
            if (static_cast<int>(factors[0].size()) - 1 == residue_dim) return {m};
            continue;
        }
        std::vector<Rep> out;
        std::vector<FpMatrix> joined(nv);
        for (int v = 0; v < nv; ++v) joined[v] = FpMatrix(m.dim(v), 0, p);
        for (const auto& g : factors) {
            std::vector<FpMatrix> bases;
            for (int v = 0; v < nv; ++v) {
                const FpMatrix gv = poly_eval(g, theta.blocks[v]);
                const FpMatrix k = kernel_basis_ff(matrix_power(gv, static_cast<std::uint64_t>(m.dim(v))));
                joined[v] = hconcat(joined[v], k);
                bases.push_back(k);
            }
            const Submodule part = restrict_to(m, std::move(bases));
            for (auto& r : decompose(part.module, rng, trial_budget)) out.push_back(std::move(r));
        }
        for (int v = 0; v < nv; ++v)
            if (m.dim(v) && !is_invertible(joined[v]))
                throw Error(ErrorCode::DecompositionStuck, "Fitting components do not span the module");
        return out;
    }
    throw Error(ErrorCode::DecompositionStuck,
                "no splitting endomorphism and no locality certificate after " + std::to_string(trial_budget) +
                    " trials");
}

IsoResult is_iso(const Rep& m, const Rep& n, std::mt19937_64& rng, int trials, bool exact_fallback) {
    IsoResult r;
    if (m.dims() != n.dims()) return r;
    if (m.is_zero()) {
        r.verdict = IsoVerdict::Yes;
        r.witness = identity_map(m);
        return r;
    }
    if (fingerprint(m) != fingerprint(n)) return r;
    const auto hom = hom_basis(m, n);
    if (hom.empty()) return r;
    for (int t = 0; t < trials; ++t) {
        RepMap f = random_combination(hom, m, n, rng);
        if (is_iso_map(f)) {
            r.verdict = IsoVerdict::Yes;
            r.witness = std::move(f);
            return r;
        }
    }
    if (!exact_fallback) {
        r.verdict = IsoVerdict::Undecided;
        r.failure_bound = std::pow(static_cast<double>(m.total_dim()) / m.prime(), trials);
        return r;
    }
    const auto back = hom_basis(n, m);
    for (const auto& f : hom)
        for (const auto& g : back)
            if (is_iso_map(compose(g, f))) {
                r.verdict = IsoVerdict::Yes;
                r.witness = f;
                return r;
            }
    return r;
}

Multiset add_multisets(const Multiset& a, const Multiset& b) {
    std::map<IsoClassId, int> acc;
    for (const auto& [id, k] : a) acc[id] += k;
    for (const auto& [id, k] : b) acc[id] += k;
    Multiset out;
    for (const auto& [id, k] : acc)
        if (k) out.emplace_back(id, k);
    return out;
}

// ----------------------------------------------------------------- Registry

Registry::Registry(AlgebraPtr alg, Residue p, int iso_trials, std::uint64_t seed, bool exact_fallback)
    : alg_(std::move(alg)), p_(p), trials_(iso_trials), exact_fallback_(exact_fallback), rng_(seed) {}

IsoClassId Registry::intern_indecomposable(const Rep& m) {
    Fingerprint fp = fingerprint(m);
    auto& bucket = buckets_[fp];
    for (IsoClassId id : bucket) {
        const IsoResult r = is_iso(classes_[id].representative, m, rng_, trials_, exact_fallback_);
        if (r.verdict == IsoVerdict::Yes) return id;
        if (r.verdict == IsoVerdict::Undecided)
            throw Error(ErrorCode::InternAmbiguous, "cannot decide whether a module is isomorphic to class " +
                                                        label(id) + " (failure bound " +
                                                        std::to_string(r.failure_bound) + ")");
    }
    IsoClass c;
    c.id = static_cast<IsoClassId>(classes_.size());
    c.representative = m;
    const auto& top = fp.top;
    if (std::count_if(top.begin(), top.end(), [](int t) { return t != 0; }) == 1) {
        const int v = static_cast<int>(std::find_if(top.begin(), top.end(), [](int t) { return t != 0; }) - top.begin());
        if (top[v] == 1 && m.total_dim() == static_cast<int>(alg_->paths_from(v).size())) c.projective_vertex = v;
    }
    c.fingerprint = std::move(fp);
    bucket.push_back(c.id);
    classes_.push_back(std::move(c));
    return classes_.back().id;
}

Multiset Registry::intern(const Rep& m) {
    if (!m.algebra()->same_as(*alg_) || m.prime() != p_)
        throw Error(ErrorCode::InvalidArgument, "module belongs to a different session");
    std::map<IsoClassId, int> acc;
    for (const Rep& part : decompose(m, rng_)) ++acc[intern_indecomposable(part)];
    return Multiset(acc.begin(), acc.end());
}

const Multiset& Registry::syzygy(IsoClassId id) {
    if (!classes_.at(id).syzygy) {
        Multiset ms;
        if (!classes_[id].is_projective()) {
            const Rep omega = itdim::syzygy(classes_[id].representative);
            ms = intern(omega);
        }
        classes_[id].syzygy = std::move(ms);
    }
    return *classes_[id].syzygy;
}

void Registry::add_name(IsoClassId id, const std::string& name) {
    auto& names = classes_.at(id).names;
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
}

std::string Registry::label(IsoClassId id) const {
    const auto& names = classes_.at(id).names;
    if (names.empty()) return "M" + std::to_string(id);
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : "=") + n;
    return out;
}

Rep Registry::realize(const Multiset& ms) const {
    std::vector<Rep> parts;
    for (const auto& [id, k] : ms)
        for (int i = 0; i < k; ++i) parts.push_back(classes_.at(id).representative);
    if (parts.empty()) return Rep::zero(alg_, p_);
    return direct_sum(alg_, p_, parts);
}

}  // namespace itdim
