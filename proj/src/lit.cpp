#include "itdim/lit.hpp"

#include <algorithm>
#include <map>

#include "itdim/errors.hpp"

namespace itdim {

namespace {

// Row vector of all block entries, used to compare maps as vectors.
FpMatrix flatten(const RepMap& f, Residue p) {
    int n = 0;
    for (const auto& b : f.blocks) n += b.rows() * b.cols();
    FpMatrix out(1, n, p);
    int k = 0;
    for (const auto& b : f.blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(0, k++) = b(i, j);
    return out;
}

// Echelon rows over F_p keyed by pivot column; rows are added one at a time.
class IncrementalBasis {
public:
    explicit IncrementalBasis(Residue p) : p_(p) {}

    // Reduces v against the basis; adds it and returns true if it is new.
    bool add(std::vector<Residue> v) {
        for (const auto& [pivot, row] : rows_) {
            const Residue c = v[pivot];
            if (!c) continue;
            for (std::size_t k = pivot; k < v.size(); ++k)
                if (row[k]) v[k] = mod_sub(v[k], mod_mul(c, row[k], p_), p_);
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && !v[pivot]) ++pivot;
        if (pivot == v.size()) return false;
        const Residue inv = mod_inv(v[pivot], p_);
        for (std::size_t k = pivot; k < v.size(); ++k) v[k] = mod_mul(v[k], inv, p_);
        for (auto& [q, row] : rows_) {
            const Residue c = row[pivot];
            if (!c) continue;
            for (std::size_t k = pivot; k < v.size(); ++k)
                if (v[k]) row[k] = mod_sub(row[k], mod_mul(c, v[k], p_), p_);
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    Residue p_;
    std::map<std::size_t, std::vector<Residue>> rows_;
};

struct Copy {
    IsoClassId cls;  // -1 for an anonymous summand
    int slot;        // index into the distinct source modules
    RepMap map;
};

Approximation assemble(const Rep& m, const std::vector<Rep>& sources, const std::vector<Copy>& copies) {
    const int nv = m.algebra()->vertices();
    const Residue p = m.prime();
    Approximation a;
    std::vector<Rep> parts;
    for (const auto& c : copies) {
        parts.push_back(sources[c.slot]);
        a.source_copies.push_back(c.cls);
    }
    a.source = parts.empty() ? Rep::zero(m.algebra(), p) : direct_sum(m.algebra(), p, parts);
    for (int v = 0; v < nv; ++v) {
        FpMatrix block(m.dim(v), 0, p);
        for (const auto& c : copies) block = hconcat(block, c.map.blocks[v]);
        a.map.blocks.push_back(std::move(block));
    }
    a.surjective = is_surjective(m, a.map);
    std::vector<FpMatrix> bases;
    for (const auto& b : a.map.blocks) bases.push_back(kernel_basis_ff(b));
    a.kernel = restrict_to(a.source, std::move(bases));
    return a;
}

}  // namespace

Approximation right_approximation(const Rep& w, const Rep& m) {
    std::vector<Copy> copies;
    for (auto& f : hom_basis(w, m)) copies.push_back({-1, 0, std::move(f)});
    return assemble(m, {w}, copies);
}

Approximation minimal_right_approximation(Session& s, const std::vector<IsoClassId>& w_classes, const Rep& m) {
    const Residue p = s.prime();
    std::vector<Rep> sources;
    std::vector<Copy> copies;
    std::vector<std::vector<RepMap>> targets;  // Hom(w_i, m) bases
    for (std::size_t i = 0; i < w_classes.size(); ++i) {
        sources.push_back(s.cls(w_classes[i]).representative);
        targets.push_back(hom_basis(sources.back(), m));
        for (const auto& f : targets.back()) copies.push_back({w_classes[i], static_cast<int>(i), f});
    }
    // rows[c]: images of the maps through copy c, written in the coordinates
    // of the Hom(w_i, m) basis inside block i. The copies approximate m
    // exactly when these rows reach rank `needed`.
    const std::size_t nw = w_classes.size();
    std::vector<std::size_t> offset(nw + 1, 0);
    for (std::size_t i = 0; i < nw; ++i) offset[i + 1] = offset[i] + targets[i].size();
    const int needed = static_cast<int>(offset[nw]);
    // Coordinates come from a left inverse on a set of independent entries.
    std::vector<std::vector<int>> pivots(nw);
    std::vector<FpMatrix> coord_inverse(nw);
    for (std::size_t i = 0; i < nw; ++i) {
        if (targets[i].empty()) continue;
        FpMatrix by_rows(0, 0, p);
        for (const auto& f : targets[i]) by_rows = by_rows.rows() ? vconcat(by_rows, flatten(f, p)) : flatten(f, p);
        pivots[i] = rref(by_rows).pivots;
        coord_inverse[i] = *inverse(by_rows.columns(pivots[i]).transpose());
    }
    std::vector<std::vector<std::vector<Residue>>> rows(copies.size());
    std::map<std::pair<std::size_t, int>, std::vector<RepMap>> hom_cache;
    for (std::size_t i = 0; i < nw; ++i) {
        if (targets[i].empty()) continue;
        const int h = static_cast<int>(targets[i].size());
        for (std::size_t c = 0; c < copies.size(); ++c) {
            auto key = std::make_pair(i, copies[c].slot);
            auto it = hom_cache.find(key);
            if (it == hom_cache.end())
                it = hom_cache.emplace(key, hom_basis(sources[i], sources[copies[c].slot])).first;
            for (const auto& phi : it->second) {
                const FpMatrix flat = flatten(compose(copies[c].map, phi), p);
                FpMatrix picked(h, 1, p);
                for (int k = 0; k < h; ++k) picked(k, 0) = flat(0, pivots[i][k]);
                const FpMatrix coords = coord_inverse[i] * picked;
                std::vector<Residue> row(offset[nw], 0);
                for (int k = 0; k < h; ++k) row[offset[i] + k] = coords(k, 0);
                rows[c].push_back(std::move(row));
            }
        }
    }
    auto rank_of = [&](const std::vector<bool>& keep) {
        IncrementalBasis b(p);
        for (std::size_t c = 0; c < copies.size(); ++c)
            if (keep[c])
                for (const auto& r : rows[c]) b.add(r);
        return b.rank();
    };
    // Forward pass keeps copies that enlarge the span; the backward pass then
    // drops any kept copy the others make redundant.
    std::vector<bool> keep(copies.size(), false);
    {
        IncrementalBasis b(p);
        for (std::size_t c = 0; c < copies.size() && b.rank() < needed; ++c) {
            bool grew = false;
            for (const auto& r : rows[c]) grew = b.add(r) || grew;
            keep[c] = grew;
        }
    }
    for (std::size_t c = copies.size(); c-- > 0;) {
        if (!keep[c]) continue;
        keep[c] = false;
        if (rank_of(keep) < needed) keep[c] = true;
    }
    std::vector<Copy> kept;
    for (std::size_t c = 0; c < copies.size(); ++c)
        if (keep[c]) kept.push_back(copies[c]);
    return assemble(m, sources, kept);
}

std::set<IsoClassId> Corpus::class_set() const {
    std::set<IsoClassId> out;
    for (const auto& e : entries)
        for (const auto& [id, k] : e.classes) {
            (void)k;
            out.insert(id);
        }
    return out;
}

Corpus standard_corpus(Session& s, const std::vector<std::pair<std::string, Rep>>& user) {
    Corpus c;
    const int nv = s.algebra()->vertices();
    auto add = [&](const std::string& name, const Rep& m) {
        if (m.is_zero()) return;
        Multiset cls = s.intern(m);
        for (const auto& e : c.entries)
            if (e.classes == cls) return;
        c.entries.push_back({name, m, std::move(cls)});
    };
    for (int v = 0; v < nv; ++v) add("S" + std::to_string(v + 1), s.simple(v));
    for (int v = 0; v < nv; ++v) add("P" + std::to_string(v + 1), s.projective(v));
    for (int v = 0; v < nv; ++v) add("I" + std::to_string(v + 1), s.injective(v));
    for (int v = 0; v < nv; ++v) add("rad P" + std::to_string(v + 1), radical(s.projective(v)).module);
    if (s.algebra()->is_nakayama()) {
        for (int v = 0; v < nv; ++v) {
            const Rep pv = s.projective(v);
            for (int k = 2; k < pv.total_dim(); ++k) {
                std::vector<FpMatrix> sub;
                for (const auto& b : radical_power(pv, k).inclusion.blocks) sub.push_back(b);
                add("P" + std::to_string(v + 1) + "/J^" + std::to_string(k), quotient(pv, sub));
            }
        }
        c.complete = true;
        c.completeness_reason = "Nakayama algebra: every indecomposable is a quotient of an indecomposable projective";
    }
    for (const auto& [name, m] : user) add(name, m);
    return c;
}

const char* sequence_kind_name(SequenceKind k) {
    switch (k) {
        case SequenceKind::InAdd: return "in-add";
        case SequenceKind::ProjectiveCover: return "projective-cover";
        case SequenceKind::Approximation: return "approximation";
        case SequenceKind::None: return "none";
    }
    return "none";
}

bool LitSetup::allowed(const Session& s, IsoClassId id) const {
    if (d.contains(s.registry(), id)) return true;
    return std::any_of(v.begin(), v.end(), [&](const auto& e) { return e.first == id; });
}

LitSetup make_lit_setup(Session& s, const Multiset& v, const DClass& d, int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
    LitSetup setup;
    setup.n = n;
    setup.v = v;
    setup.d = d;
    std::set<IsoClassId> w;
    for (const auto& [id, k] : v) {
        (void)k;
        w.insert(id);
    }
    int taken = 0;
    for (IsoClassId id : d.closure) {
        if (s.is_projective(id)) continue;
        if (taken == s.config().d_cap) {
            setup.cap_breached = true;
            break;
        }
        w.insert(id);
        ++taken;
    }
    for (int u = 0; u < s.algebra()->vertices(); ++u) w.insert(s.projective_class(u));
    setup.w_classes.assign(w.begin(), w.end());
    return setup;
}

LitSetup make_lit_setup(Session& s, const Rep& v, const DClass& d, int n) {
    return make_lit_setup(s, v.is_zero() ? Multiset{} : s.intern(v), d, n);
}

namespace {

bool dims_add_up(const Rep& x1, const Rep& x0, const Rep& target) {
    for (int u = 0; u < target.algebra()->vertices(); ++u)
        if (x1.dim(u) + target.dim(u) != x0.dim(u)) return false;
    return true;
}

bool injective_map(const RepMap& f) {
    return std::all_of(f.blocks.begin(), f.blocks.end(), [](const FpMatrix& b) { return rank_ff(b) == b.cols(); });
}

}  // namespace

ClassSequence certify_target_class(Session& s, IsoClassId target, const LitSetup& setup) {
    ClassSequence seq;
    seq.target = target;
    if (setup.allowed(s, target)) {
        seq.kind = SequenceKind::InAdd;
        seq.x0 = {{target, 1}};
        seq.verified = true;
        return seq;
    }
    const Rep& n = s.cls(target).representative;
    const Multiset& omega = s.syzygy(target);
    if (std::all_of(omega.begin(), omega.end(), [&](const auto& e) { return setup.allowed(s, e.first); })) {
        const ProjectiveCover pc = projective_cover(n);
        const Submodule k = syzygy_with_inclusion(n);
        Multiset x0;
        for (int v : pc.summand_vertices) x0 = add_multisets(x0, {{s.projective_class(v), 1}});
        seq.kind = SequenceKind::ProjectiveCover;
        seq.x0 = std::move(x0);
        seq.x1 = omega;
        seq.verified = is_surjective(n, pc.epi) && injective_map(k.inclusion) && dims_add_up(k.module, pc.projective, n);
        return seq;
    }
    const Approximation a = minimal_right_approximation(s, setup.w_classes, n);
    if (!a.surjective) return seq;
    const Multiset kernel = a.kernel.module.is_zero() ? Multiset{} : s.intern(a.kernel.module);
    if (!std::all_of(kernel.begin(), kernel.end(), [&](const auto& e) { return setup.allowed(s, e.first); }))
        return seq;
    Multiset x0;
    for (IsoClassId id : a.source_copies) x0 = add_multisets(x0, {{id, 1}});
    seq.kind = SequenceKind::Approximation;
    seq.x0 = std::move(x0);
    seq.x1 = kernel;
    seq.verified = injective_map(a.kernel.inclusion) && dims_add_up(a.kernel.module, a.source, n);
    return seq;
}

ConditionB certify_condition_b(Session& s, const Multiset& m, const LitSetup& setup) {
    ConditionB out;
    out.target = syzygy_multiset(s, m, setup.n);
    out.verdict = Verdict::Pass;
    for (const auto& [id, k] : out.target) {
        (void)k;
        ClassSequence seq = certify_target_class(s, id, setup);
        if (seq.kind == SequenceKind::None || !seq.verified) out.verdict = Verdict::Inconclusive;
        out.sequences.push_back(std::move(seq));
    }
    return out;
}

ConditionB certify_condition_b(Session& s, const Rep& m, const Rep& v, const DClass& d, int n) {
    return certify_condition_b(s, s.intern(m), make_lit_setup(s, v, d, n));
}

LitCertificate certify_lit(Session& s, const Rep& v, const DClass& d, int n, const Corpus& corpus) {
    LitCertificate cert;
    FittingReport fr;
    cert.condition_a_phi = phi_D(s, multiset_of(d.closure), projectives_only(s), &fr);
    if (cert.condition_a_phi > 0) {
        std::string culprit = "the closure sum";
        for (IsoClassId id : d.closure)
            if (phi_D(s, Multiset{{id, 1}}, projectives_only(s)) > 0) {
                culprit = s.registry().label(id);
                break;
            }
        throw Error(ErrorCode::ConditionAViolated,
                    "Φ over the D-closure is " + std::to_string(cert.condition_a_phi) + "; offending member " + culprit);
    }
    // A listed closure is exact; mod Λ is only known through the corpus.
    cert.condition_a_exact = !d.everything || corpus.complete;

    cert.setup = make_lit_setup(s, v, d, n);
    cert.global = Verdict::Pass;
    for (const auto& e : corpus.entries) {
        LitRecord rec{e.name, certify_condition_b(s, e.classes, cert.setup)};
        if (rec.result.verdict != Verdict::Pass) cert.global = Verdict::Inconclusive;
        cert.records.push_back(std::move(rec));
    }
    cert.psi_d_v = psi_D(s, cert.setup.v, d);

    bool b_exhaustive = false;
    if (cert.global == Verdict::Pass) {
        if (corpus.complete) {
            b_exhaustive = true;
            cert.scope = corpus.completeness_reason;
        } else if (d.everything && n == 0) {
            b_exhaustive = true;
            cert.scope = "every module lies in D";
        } else if (n >= 1 && s.algebra()->radical_square_zero()) {
            bool simples_ok = true;
            for (int u = 0; u < s.algebra()->vertices() && simples_ok; ++u) {
                const ClassSequence seq = certify_target_class(s, s.simple_class(u), cert.setup);
                simples_ok = seq.kind != SequenceKind::None && seq.verified;
            }
            if (simples_ok) {
                b_exhaustive = true;
                cert.scope = "J^2 = 0: syzygies are semisimple plus projective and every simple is certified";
            }
        }
    }
    cert.exhaustive = b_exhaustive && cert.condition_a_exact;
    if (!cert.exhaustive) cert.scope = "corpus-only";
    return cert;
}

int findim_bound(const LitCertificate& cert) {
    if (cert.global != Verdict::Pass) throw Error(ErrorCode::InvalidArgument, "findim_bound needs a certified LIT certificate");
    return cert.psi_d_v + cert.setup.n + 1;
}

int corpus_findim(Session& s, const Corpus& corpus) {
    return findim_classes(s, corpus.class_set(), s.config().cutoff);
}

DClass perp_surrogate(Session& s, const Corpus& corpus, const Rep& t, int window) {
    std::vector<IsoClassId> gens;
    for (IsoClassId id : corpus.class_set())
        if (!s.is_projective(id) && ext_window_zero(s.cls(id).representative, t, 1, window, window + 1))
            gens.push_back(id);
    // ⊥T is closed under syzygies, so only classes whose syzygies stay inside count.
    DClass d = projectives_only(s);
    std::set<IsoClassId> keep(gens.begin(), gens.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = keep.begin(); it != keep.end();) {
            const Multiset& om = s.syzygy(*it);
            const bool closed = std::all_of(om.begin(), om.end(), [&](const auto& e) {
                return s.is_projective(e.first) || keep.count(e.first) > 0;
            });
            if (closed) {
                ++it;
            } else {
                it = keep.erase(it);
                changed = true;
            }
        }
    }
    d.generators.assign(keep.begin(), keep.end());
    d.closure.insert(keep.begin(), keep.end());
    d.description = "perp-window(" + std::to_string(window) + ")";
    return d;
}

}  // namespace itdim
