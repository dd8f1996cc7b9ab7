#include "itdim/repmod.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "itdim/errors.hpp"

namespace itdim {

namespace {

FpMatrix zero_matrix(int r, int c, Residue p) { return FpMatrix(r, c, p); }

FpMatrix rows_of(const FpMatrix& m, const std::vector<int>& which) {
    FpMatrix out(static_cast<int>(which.size()), m.cols(), m.prime());
    for (std::size_t k = 0; k < which.size(); ++k)
        for (int c = 0; c < m.cols(); ++c) out(static_cast<int>(k), c) = m(which[k], c);
    return out;
}

// Stack the images landing in each vertex: the radical span.
FpMatrix incoming_images(const Rep& m, int v) {
    const Quiver& q = m.algebra()->quiver();
    FpMatrix acc(m.dim(v), 0, m.prime());
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].target == v && m.action(static_cast<int>(a)).cols() > 0)
            acc = hconcat(acc, m.action(static_cast<int>(a)));
    return acc;
}

// Rows stacked over the arrows leaving v: its kernel is the socle at v.
FpMatrix outgoing_stack(const Rep& m, int v) {
    const Quiver& q = m.algebra()->quiver();
    FpMatrix acc(0, m.dim(v), m.prime());
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == v) acc = vconcat(acc, m.action(static_cast<int>(a)));
    return acc;
}

void check_relations(const Rep& m) {
    const MonomialPresentation& pres = m.algebra()->presentation();
    const Quiver& q = pres.quiver;
    for (const auto& word : pres.relations) {
        FpMatrix prod = FpMatrix::identity(m.dim(q.arrows[word[0]].source), m.prime());
        for (int a : word) prod = m.action(a) * prod;
        if (!prod.is_zero()) throw Error(ErrorCode::InvalidArgument, "module does not satisfy a relation");
    }
    if (pres.truncation) {
        // J^k M computed as iterated images; must vanish at k = N.
        std::vector<FpMatrix> layer(q.vertices);
        for (int v = 0; v < q.vertices; ++v) layer[v] = FpMatrix::identity(m.dim(v), m.prime());
        for (int k = 0; k < *pres.truncation; ++k) {
            std::vector<FpMatrix> next(q.vertices);
            for (int v = 0; v < q.vertices; ++v) next[v] = FpMatrix(m.dim(v), 0, m.prime());
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                const Arrow& ar = q.arrows[a];
                if (layer[ar.source].cols() == 0) continue;
                next[ar.target] = hconcat(next[ar.target], m.action(static_cast<int>(a)) * layer[ar.source]);
            }
            for (int v = 0; v < q.vertices; ++v) next[v] = column_space_basis(next[v]);
            layer = std::move(next);
        }
        for (const auto& l : layer)
            if (l.cols() > 0) throw Error(ErrorCode::InvalidArgument, "module does not satisfy the truncation relation");
    }
}

// Cover data for the indecomposable projective summands P_{v_k}: the
// generator of summand k maps to columns gens[k] in M_{v_k}.
RepMap map_from_free(const Rep& m, const ProjectiveCover& free, const std::vector<FpMatrix>& gens) {
    const Algebra& alg = *m.algebra();
    std::vector<FpMatrix> blocks;
    for (int w = 0; w < alg.vertices(); ++w) {
        FpMatrix block(m.dim(w), free.projective.dim(w), m.prime());
        int col = 0;
        for (const auto& [k, path] : free.labels[w]) {
            const FpMatrix image = m.path_action(path) * gens[k];
            for (int r = 0; r < m.dim(w); ++r) block(r, col) = image(r, 0);
            ++col;
        }
        blocks.push_back(std::move(block));
    }
    return RepMap{std::move(blocks)};
}

// Minimal cover generators: (vertex, column in M_vertex).
std::vector<std::pair<int, FpMatrix>> top_generators(const Rep& m) {
    std::vector<std::pair<int, FpMatrix>> gens;
    for (int v = 0; v < m.algebra()->vertices(); ++v) {
        const FpMatrix comp = complement_basis(column_space_basis(incoming_images(m, v)), m.dim(v));
        for (int c = 0; c < comp.cols(); ++c) gens.emplace_back(v, comp.column(c));
    }
    return gens;
}

}  // namespace

// --------------------------------------------------------------------- Rep

Rep::Rep(AlgebraPtr alg, Residue p, std::vector<int> dims, std::vector<FpMatrix> action)
    : Rep(std::move(alg), p, std::move(dims), std::move(action), true) {}

Rep Rep::unchecked(AlgebraPtr alg, Residue p, std::vector<int> dims, std::vector<FpMatrix> action) {
    return Rep(std::move(alg), p, std::move(dims), std::move(action), false);
}

Rep::Rep(AlgebraPtr alg, Residue p, std::vector<int> dims, std::vector<FpMatrix> action, bool check)
    : alg_(std::move(alg)), p_(p), dims_(std::move(dims)), action_(std::move(action)) {
    if (!alg_) throw Error(ErrorCode::InvalidArgument, "module without algebra");
    const Quiver& q = alg_->quiver();
    if (static_cast<int>(dims_.size()) != q.vertices)
        throw Error(ErrorCode::InvalidArgument, "dimension vector length differs from vertex count");
    if (action_.size() != q.arrows.size())
        throw Error(ErrorCode::InvalidArgument, "one matrix per arrow is required");
    for (int d : dims_)
        if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const FpMatrix& mat = action_[a];
        if (mat.rows() != dims_[q.arrows[a].target] || mat.cols() != dims_[q.arrows[a].source])
            throw Error(ErrorCode::InvalidArgument, "arrow '" + q.arrows[a].name + "' matrix has the wrong shape");
        if (mat.prime() != p_ && !mat.empty()) throw Error(ErrorCode::InvalidArgument, "matrix over a different prime");
        if (mat.prime() != p_) action_[a] = FpMatrix(mat.rows(), mat.cols(), p_);
    }
    if (check) check_relations(*this);
}

Rep Rep::zero(AlgebraPtr alg, Residue p) {
    const int n = alg->vertices();
    std::vector<FpMatrix> action(alg->arrow_count(), FpMatrix(0, 0, p));
    return Rep::unchecked(std::move(alg), p, std::vector<int>(n, 0), std::move(action));
}

int Rep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

FpMatrix Rep::path_action(int path) const {
    const Path& pp = alg_->basis().paths[path];
    FpMatrix prod = FpMatrix::identity(dims_[pp.source], p_);
    for (int a : pp.arrows) prod = action_[a] * prod;
    return prod;
}

// ------------------------------------------------------------------- maps

bool intertwines(const Rep& dom, const Rep& cod, const RepMap& f) {
    const Quiver& q = dom.algebra()->quiver();
    if (static_cast<int>(f.blocks.size()) != q.vertices) return false;
    for (int v = 0; v < q.vertices; ++v)
        if (f.blocks[v].rows() != cod.dim(v) || f.blocks[v].cols() != dom.dim(v)) return false;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        if (f.blocks[t] * dom.action(static_cast<int>(a)) != cod.action(static_cast<int>(a)) * f.blocks[s]) return false;
    }
    return true;
}

RepMap make_map(const Rep& dom, const Rep& cod, std::vector<FpMatrix> blocks) {
    RepMap f{std::move(blocks)};
    if (!intertwines(dom, cod, f)) throw Error(ErrorCode::InvalidArgument, "blocks do not define a module homomorphism");
    return f;
}

RepMap identity_map(const Rep& m) {
    RepMap f;
    for (int d : m.dims()) f.blocks.push_back(FpMatrix::identity(d, m.prime()));
    return f;
}

RepMap zero_map(const Rep& dom, const Rep& cod) {
    RepMap f;
    for (int v = 0; v < static_cast<int>(dom.dims().size()); ++v)
        f.blocks.push_back(zero_matrix(cod.dim(v), dom.dim(v), dom.prime()));
    return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

RepMap add_maps(const RepMap& f, const RepMap& g) {
    RepMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
    return h;
}

RepMap scale_map(const RepMap& f, Residue s) {
    RepMap h;
    for (const auto& b : f.blocks) h.blocks.push_back(scale(b, s));
    return h;
}

bool is_iso_map(const RepMap& f) {
    for (const auto& b : f.blocks)
        if (!is_invertible(b)) return false;
    return true;
}

bool is_surjective(const Rep& cod, const RepMap& f) {
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        if (rank_ff(f.blocks[v]) != cod.dim(static_cast<int>(v))) return false;
    return true;
}

// ---------------------------------------------------------- constructions

Rep simple(const AlgebraPtr& alg, Residue p, int v) {
    if (v < 0 || v >= alg->vertices()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    std::vector<int> dims(alg->vertices(), 0);
    dims[v] = 1;
    std::vector<FpMatrix> action;
    for (const auto& a : alg->quiver().arrows) action.emplace_back(dims[a.target], dims[a.source], p);
    return Rep::unchecked(alg, p, std::move(dims), std::move(action));
}

ProjectiveCover free_module(const AlgebraPtr& alg, Residue p, std::span<const int> vertices) {
    const int n = alg->vertices();
    const PathBasis& basis = alg->basis();
    ProjectiveCover out;
    out.summand_vertices.assign(vertices.begin(), vertices.end());
    out.labels.assign(n, {});
    std::vector<int> dims(n, 0);
    // position of each (summand, path) label inside its vertex space
    std::vector<std::map<std::pair<int, int>, int>> position(n);
    for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
        const int v = vertices[k];
        if (v < 0 || v >= n) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
        for (int w = 0; w < n; ++w)
            for (int path : basis.between[v][w]) {
                position[w][{k, path}] = dims[w]++;
                out.labels[w].emplace_back(k, path);
            }
    }
    std::vector<FpMatrix> action;
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        FpMatrix mat(dims[ar.target], dims[ar.source], p);
        for (const auto& [k, path] : out.labels[ar.source]) {
            const int ext = alg->extend(path, a);
            if (ext < 0) continue;
            mat(position[ar.target].at({k, ext}), position[ar.source].at({k, path})) = 1 % p;
        }
        action.push_back(std::move(mat));
    }
    out.projective = Rep::unchecked(alg, p, std::move(dims), std::move(action));
    return out;
}

Rep projective(const AlgebraPtr& alg, Residue p, int v) {
    const int vs[] = {v};
    return free_module(alg, p, vs).projective;
}

Rep regular(const AlgebraPtr& alg, Residue p) {
    std::vector<int> vs(alg->vertices());
    std::iota(vs.begin(), vs.end(), 0);
    return free_module(alg, p, vs).projective;
}

Rep dual(const Rep& m, const AlgebraPtr& target) {
    if (!(target->presentation() == opposite(m.algebra()->presentation())))
        throw Error(ErrorCode::InvalidArgument, "dual: target algebra is not the opposite algebra");
    std::vector<FpMatrix> action;
    for (const auto& a : m.actions()) action.push_back(a.transpose());
    return Rep::unchecked(target, m.prime(), m.dims(), std::move(action));
}

Rep dual(const Rep& m) { return dual(m, Algebra::create(opposite(m.algebra()->presentation()))); }

Rep injective(const AlgebraPtr& alg, Residue p, int v) {
    const AlgebraPtr op = Algebra::create(opposite(alg->presentation()));
    return dual(projective(op, p, v), alg);
}

Rep direct_sum(const AlgebraPtr& alg, Residue p, std::span<const Rep> ms) {
    const int n = alg->vertices();
    std::vector<int> dims(n, 0);
    for (const auto& m : ms) {
        if (!m.algebra()->same_as(*alg) || m.prime() != p)
            throw Error(ErrorCode::InvalidArgument, "direct_sum: modules over different algebras");
        for (int v = 0; v < n; ++v) dims[v] += m.dim(v);
    }
    std::vector<FpMatrix> action;
    for (int a = 0; a < alg->arrow_count(); ++a) {
        std::vector<FpMatrix> blocks;
        for (const auto& m : ms) blocks.push_back(m.action(a));
        action.push_back(block_diagonal(blocks, p));
    }
    return Rep::unchecked(alg, p, std::move(dims), std::move(action));
}

Rep direct_sum(const Rep& a, const Rep& b) {
    const Rep both[] = {a, b};
    return direct_sum(a.algebra(), a.prime(), both);
}

Submodule restrict_to(const Rep& m, std::vector<FpMatrix> bases) {
    const Quiver& q = m.algebra()->quiver();
    const Residue p = m.prime();
    std::vector<int> dims;
    for (const auto& b : bases) dims.push_back(b.cols());
    // Left inverse per vertex: invert a square block of independent rows.
    std::vector<std::vector<int>> pivot_rows(bases.size());
    std::vector<FpMatrix> block_inverse(bases.size());
    for (std::size_t v = 0; v < bases.size(); ++v) {
        if (bases[v].cols() == 0) continue;
        pivot_rows[v] = rref(bases[v].transpose()).pivots;
        if (static_cast<int>(pivot_rows[v].size()) != bases[v].cols())
            throw Error(ErrorCode::InvalidArgument, "restrict_to: basis columns are dependent");
        auto inv = inverse(rows_of(bases[v], pivot_rows[v]));
        block_inverse[v] = std::move(*inv);
    }
    std::vector<FpMatrix> action;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        const FpMatrix image = m.action(static_cast<int>(a)) * bases[s];
        if (bases[t].cols() == 0) {
            if (!image.is_zero()) throw Error(ErrorCode::InvalidArgument, "restrict_to: span is not a submodule");
            action.emplace_back(0, dims[s], p);
            continue;
        }
        FpMatrix x = block_inverse[t] * rows_of(image, pivot_rows[t]);
        if (!(bases[t] * x == image)) throw Error(ErrorCode::InvalidArgument, "restrict_to: span is not a submodule");
        action.push_back(std::move(x));
    }
    Rep sub = Rep::unchecked(m.algebra(), p, std::move(dims), std::move(action));
    return Submodule{std::move(sub), RepMap{std::move(bases)}};
}

Submodule radical(const Rep& m) {
    std::vector<FpMatrix> bases;
    for (int v = 0; v < m.algebra()->vertices(); ++v) bases.push_back(column_space_basis(incoming_images(m, v)));
    return restrict_to(m, std::move(bases));
}

Submodule radical_power(const Rep& m, int k) {
    const Quiver& q = m.algebra()->quiver();
    const int nv = q.vertices;
    std::vector<FpMatrix> bases;
    for (int v = 0; v < nv; ++v) bases.push_back(FpMatrix::identity(m.dim(v), m.prime()));
    for (int step = 0; step < k; ++step) {
        std::vector<FpMatrix> next;
        for (int v = 0; v < nv; ++v) next.emplace_back(m.dim(v), 0, m.prime());
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const int s = q.arrows[a].source, t = q.arrows[a].target;
            if (bases[s].cols() == 0) continue;
            next[t] = hconcat(next[t], m.action(static_cast<int>(a)) * bases[s]);
        }
        for (auto& b : next) b = column_space_basis(b);
        bases = std::move(next);
    }
    return restrict_to(m, std::move(bases));
}

Rep quotient(const Rep& m, const std::vector<FpMatrix>& sub) {
    const Quiver& q = m.algebra()->quiver();
    const int nv = q.vertices;
    const Residue p = m.prime();
    std::vector<FpMatrix> comp, inv;
    std::vector<int> dims;
    for (int v = 0; v < nv; ++v) {
        const FpMatrix s = sub[v].cols() ? sub[v] : FpMatrix(m.dim(v), 0, p);
        comp.push_back(complement_basis(s, m.dim(v)));
        dims.push_back(comp.back().cols());
        auto i = inverse(hconcat(s, comp.back()));
        if (!i) throw Error(ErrorCode::InvalidArgument, "quotient: submodule basis is not independent");
        inv.push_back(std::move(*i));
    }
    std::vector<FpMatrix> action;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const int s = q.arrows[a].source, t = q.arrows[a].target;
        const FpMatrix coords = inv[t] * (m.action(static_cast<int>(a)) * comp[s]);
        const int offset = m.dim(t) - dims[t];
        FpMatrix block(dims[t], dims[s], p);
        for (int r = 0; r < dims[t]; ++r)
            for (int c = 0; c < dims[s]; ++c) block(r, c) = coords(offset + r, c);
        action.push_back(std::move(block));
    }
    return Rep::unchecked(m.algebra(), p, std::move(dims), std::move(action));
}

Submodule socle(const Rep& m) {
    std::vector<FpMatrix> bases;
    for (int v = 0; v < m.algebra()->vertices(); ++v) {
        const FpMatrix stack = outgoing_stack(m, v);
        bases.push_back(stack.rows() ? kernel_basis_ff(stack) : FpMatrix::identity(m.dim(v), m.prime()));
    }
    return restrict_to(m, std::move(bases));
}

std::vector<int> top_dims(const Rep& m) {
    std::vector<int> out;
    for (int v = 0; v < m.algebra()->vertices(); ++v) out.push_back(m.dim(v) - rank_ff(incoming_images(m, v)));
    return out;
}

std::vector<int> socle_dims(const Rep& m) {
    std::vector<int> out;
    for (int v = 0; v < m.algebra()->vertices(); ++v) {
        const FpMatrix stack = outgoing_stack(m, v);
        out.push_back(m.dim(v) - (stack.rows() ? rank_ff(stack) : 0));
    }
    return out;
}

ProjectiveCover projective_cover(const Rep& m) {
    if (m.is_zero()) throw Error(ErrorCode::ZeroModule, "projective cover of the zero module");
    const auto gens = top_generators(m);
    std::vector<int> vertices;
    std::vector<FpMatrix> columns;
    for (const auto& [v, x] : gens) {
        vertices.push_back(v);
        columns.push_back(x);
    }
    ProjectiveCover cover = free_module(m.algebra(), m.prime(), vertices);
    cover.epi = map_from_free(m, cover, columns);
    return cover;
}

Submodule syzygy_with_inclusion(const Rep& m) {
    if (m.is_zero()) return Submodule{m, identity_map(m)};
    const ProjectiveCover cover = projective_cover(m);
    std::vector<FpMatrix> bases;
    for (const auto& e : cover.epi.blocks) bases.push_back(kernel_basis_ff(e));
    return restrict_to(cover.projective, std::move(bases));
}

Rep syzygy(const Rep& m) { return syzygy_with_inclusion(m).module; }

Rep syzygy_iter(const Rep& m, int n) {
    Rep cur = m;
    for (int i = 0; i < n && !cur.is_zero(); ++i) cur = syzygy(cur);
    return cur;
}

// ---------------------------------------------------------------- hom/ext

// A map f: M -> N is fixed by the images x_k of the top generators of M.
// f composed with the cover P -> M sends label (k, path) to path * x_k and
// must kill the kernel of the cover; f itself is recovered through a section.
std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) {
    if (!m.same_algebra(n)) throw Error(ErrorCode::InvalidArgument, "hom_basis: modules over different algebras");
    if (m.is_zero() || n.is_zero()) return {};
    const Residue p = m.prime();
    const int nv = m.algebra()->vertices();
    const ProjectiveCover cover = projective_cover(m);
    const auto& tops = cover.summand_vertices;
    std::vector<int> x_offset(tops.size() + 1, 0);
    for (std::size_t k = 0; k < tops.size(); ++k) x_offset[k + 1] = x_offset[k] + n.dim(tops[k]);
    const int vars = x_offset.back();
    if (vars == 0) return {};

    std::map<int, FpMatrix> path_cache;
    auto on_n = [&](int path) -> const FpMatrix& {
        auto it = path_cache.find(path);
        if (it == path_cache.end()) it = path_cache.emplace(path, n.path_action(path)).first;
        return it->second;
    };

    // The system is tall with few unknowns; reduce it whenever it doubles.
    std::vector<std::vector<Residue>> equations;
    int rank = 0;
    auto compact = [&] {
        FpMatrix system(static_cast<int>(equations.size()), vars, p);
        for (int i = 0; i < system.rows(); ++i)
            for (int j = 0; j < vars; ++j) system(i, j) = equations[i][j];
        const Echelon e = rref(system);
        rank = static_cast<int>(e.pivots.size());
        equations.resize(rank);
        for (int i = 0; i < rank; ++i) {
            const auto row = e.reduced.row(i);
            equations[i].assign(row.begin(), row.end());
        }
    };
    for (int w = 0; w < nv; ++w) {
        if (n.dim(w) == 0 || cover.projective.dim(w) == 0) continue;
        const FpMatrix kernel = kernel_basis_ff(cover.epi.blocks[w]);
        const auto& labels = cover.labels[w];
        for (int c = 0; c < kernel.cols(); ++c)
            for (int r = 0; r < n.dim(w); ++r) {
                std::vector<Residue> eq(vars, 0);
                bool nonzero = false;
                for (std::size_t j = 0; j < labels.size(); ++j) {
                    const Residue kc = kernel(static_cast<int>(j), c);
                    if (!kc) continue;
                    const auto [k, path] = labels[j];
                    const FpMatrix& act = on_n(path);
                    for (int t = 0; t < act.cols(); ++t)
                        if (act(r, t)) {
                            Residue& e = eq[x_offset[k] + t];
                            e = mod_add(e, mod_mul(act(r, t), kc, p), p);
                            nonzero = true;
                        }
                }
                if (!nonzero) continue;
                equations.push_back(std::move(eq));
                if (static_cast<int>(equations.size()) >= 2 * vars + 8) {
                    compact();
                    if (rank == vars) return {};
                }
            }
    }
    FpMatrix solutions = FpMatrix::identity(vars, p);
    if (!equations.empty()) {
        FpMatrix system(static_cast<int>(equations.size()), vars, p);
        for (int i = 0; i < system.rows(); ++i)
            for (int j = 0; j < vars; ++j) system(i, j) = equations[i][j];
        solutions = kernel_basis_ff(system);
    }

    std::vector<FpMatrix> sections;
    for (int w = 0; w < nv; ++w) {
        if (m.dim(w) == 0) {
            sections.emplace_back(cover.projective.dim(w), 0, p);
            continue;
        }
        auto sec = solve_ff(cover.epi.blocks[w], FpMatrix::identity(m.dim(w), p));
        if (!sec) throw std::logic_error("projective cover is not surjective");
        sections.push_back(std::move(*sec));
    }

    std::vector<RepMap> out;
    out.reserve(solutions.cols());
    for (int c = 0; c < solutions.cols(); ++c) {
        RepMap f;
        for (int w = 0; w < nv; ++w) {
            const auto& labels = cover.labels[w];
            FpMatrix through(n.dim(w), static_cast<int>(labels.size()), p);
            for (std::size_t j = 0; j < labels.size() && n.dim(w) > 0; ++j) {
                const auto [k, path] = labels[j];
                const FpMatrix& act = on_n(path);
                for (int r = 0; r < n.dim(w); ++r) {
                    Residue acc = 0;
                    for (int t = 0; t < act.cols(); ++t)
                        if (act(r, t)) acc = mod_add(acc, mod_mul(act(r, t), solutions(x_offset[k] + t, c), p), p);
                    through(r, static_cast<int>(j)) = acc;
                }
            }
            f.blocks.push_back(through * sections[w]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Rep& m, const Rep& n) { return static_cast<int>(hom_basis(m, n).size()); }

namespace {

// One step of a minimal projective resolution: P_i with, for every summand
// generator, its image in P_{i-1} expressed in P_{i-1}'s vertex basis.
struct ResolutionStep {
    ProjectiveCover cover;
    std::vector<FpMatrix> images;  // empty for step 0
};

std::vector<ResolutionStep> minimal_resolution(const Rep& m, int steps) {
    std::vector<ResolutionStep> out;
    Rep current = m;
    RepMap into_previous;  // inclusion of `current` into the previous projective
    for (int i = 0; i < steps && !current.is_zero(); ++i) {
        const auto gens = top_generators(current);
        std::vector<int> vertices;
        std::vector<FpMatrix> columns;
        for (const auto& [v, x] : gens) {
            vertices.push_back(v);
            columns.push_back(x);
        }
        ResolutionStep step;
        step.cover = free_module(m.algebra(), m.prime(), vertices);
        step.cover.epi = map_from_free(current, step.cover, columns);
        if (i > 0)
            for (std::size_t k = 0; k < gens.size(); ++k)
                step.images.push_back(into_previous.blocks[gens[k].first] * gens[k].second);
        std::vector<FpMatrix> bases;
        for (const auto& e : step.cover.epi.blocks) bases.push_back(kernel_basis_ff(e));
        Submodule next = restrict_to(step.cover.projective, std::move(bases));
        out.push_back(std::move(step));
        current = std::move(next.module);
        into_previous = std::move(next.inclusion);
    }
    return out;
}

// Matrix of Hom(d, N): Hom(P_{i-1}, N) -> Hom(P_i, N) in the coordinates
// Hom(P, N) = ⊕_k N_{v_k}.
FpMatrix dual_differential(const ResolutionStep& prev, const ResolutionStep& cur, const Rep& n) {
    const Residue p = n.prime();
    const auto& pv = prev.cover.summand_vertices;
    const auto& cv = cur.cover.summand_vertices;
    std::vector<int> col_off(pv.size() + 1, 0), row_off(cv.size() + 1, 0);
    for (std::size_t j = 0; j < pv.size(); ++j) col_off[j + 1] = col_off[j] + n.dim(pv[j]);
    for (std::size_t k = 0; k < cv.size(); ++k) row_off[k + 1] = row_off[k] + n.dim(cv[k]);
    FpMatrix d(row_off.back(), col_off.back(), p);
    for (std::size_t k = 0; k < cv.size(); ++k) {
        const int u = cv[k];
        const FpMatrix& y = cur.images[k];
        const auto& labels = prev.cover.labels[u];
        for (std::size_t pos = 0; pos < labels.size(); ++pos) {
            const Residue c = y(static_cast<int>(pos), 0);
            if (!c) continue;
            const auto [j, path] = labels[pos];
            const FpMatrix block = scale(n.path_action(path), c);
            for (int r = 0; r < block.rows(); ++r)
                for (int cc = 0; cc < block.cols(); ++cc)
                    d(row_off[k] + r, col_off[j] + cc) = mod_add(d(row_off[k] + r, col_off[j] + cc), block(r, cc), p);
        }
    }
    return d;
}

}  // namespace

std::vector<int> ext_dims(const Rep& m, const Rep& n, int max_degree, int cutoff) {
    if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "ext_dim: negative degree");
    if (!m.same_algebra(n)) throw Error(ErrorCode::InvalidArgument, "ext_dim: modules over different algebras");
    if (max_degree + 1 > cutoff)
        throw Error(ErrorCode::ResolutionCutoff, "Ext^" + std::to_string(max_degree) +
                                                     " needs a resolution past the cutoff " + std::to_string(cutoff));
    const auto res = minimal_resolution(m, max_degree + 2);
    const int len = static_cast<int>(res.size());
    // ranks[i] = rank of Hom(d_i, n) : Hom(P_{i-1}, n) -> Hom(P_i, n), i >= 1
    std::vector<int> ranks(len + 1, 0);
    for (int i = 1; i < len; ++i) ranks[i] = rank_ff(dual_differential(res[i - 1], res[i], n));
    std::vector<int> out(max_degree + 1, 0);
    for (int i = 0; i <= max_degree && i < len; ++i) {
        int hom_pi = 0;
        for (int v : res[i].cover.summand_vertices) hom_pi += n.dim(v);
        out[i] = hom_pi - ranks[i + 1] - ranks[i];
    }
    return out;
}

int ext_dim(const Rep& m, const Rep& n, int i, int cutoff) {
    if (i < 0) throw Error(ErrorCode::InvalidArgument, "ext_dim: negative degree");
    return ext_dims(m, n, i, cutoff)[i];
}

int ext1_dim_via_syzygy(const Rep& m, const Rep& n) {
    if (m.is_zero()) return 0;
    const ProjectiveCover cover = projective_cover(m);
    std::vector<FpMatrix> bases;
    for (const auto& e : cover.epi.blocks) bases.push_back(kernel_basis_ff(e));
    const Submodule omega = restrict_to(cover.projective, std::move(bases));
    const auto hom_omega = hom_basis(omega.module, n);
    if (hom_omega.empty()) return 0;
    const auto hom_p0 = hom_basis(cover.projective, n);
    // coordinates of g∘ι flattened over all vertex blocks
    auto flatten = [](const RepMap& f) {
        std::vector<Residue> out;
        for (const auto& b : f.blocks) out.insert(out.end(), b.data().begin(), b.data().end());
        return out;
    };
    const auto sample = flatten(hom_omega.front());
    FpMatrix restricted(static_cast<int>(hom_p0.size()), static_cast<int>(sample.size()), m.prime());
    for (std::size_t g = 0; g < hom_p0.size(); ++g) {
        const auto v = flatten(compose(hom_p0[g], omega.inclusion));
        for (std::size_t c = 0; c < v.size(); ++c) restricted(static_cast<int>(g), static_cast<int>(c)) = v[c];
    }
    return static_cast<int>(hom_omega.size()) - rank_ff(restricted);
}

}  // namespace itdim
