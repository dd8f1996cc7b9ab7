#pragma once

// Left Λ-modules as quiver representations: arrow a acts by a matrix of
// shape dims[target(a)] x dims[source(a)].

#include <span>
#include <vector>

#include "itdim/exactla.hpp"
#include "itdim/presentation.hpp"

namespace itdim {

class Rep {
public:
    Rep() = default;
    /// Validates shapes and that every relation acts by zero.
    Rep(AlgebraPtr alg, Residue p, std::vector<int> dims, std::vector<FpMatrix> action);

    /// Checks shapes only. For modules derived from valid ones (submodules,
    /// quotients, sums, duals, path-basis projectives).
    static Rep unchecked(AlgebraPtr alg, Residue p, std::vector<int> dims, std::vector<FpMatrix> action);

    static Rep zero(AlgebraPtr alg, Residue p);

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    Residue prime() const noexcept { return p_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int dim(int v) const { return dims_[v]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const FpMatrix& action(int arrow) const { return action_[arrow]; }
    const std::vector<FpMatrix>& actions() const noexcept { return action_; }

    /// Matrix of the path (basis index) acting from M_source to M_target.
    FpMatrix path_action(int path) const;

    bool same_algebra(const Rep& other) const { return alg_->same_as(*other.alg_) && p_ == other.p_; }

    friend bool operator==(const Rep& a, const Rep& b) {
        return a.same_algebra(b) && a.dims_ == b.dims_ && a.action_ == b.action_;
    }

private:
    Rep(AlgebraPtr alg, Residue p, std::vector<int> dims, std::vector<FpMatrix> action, bool check_relations);

    AlgebraPtr alg_;
    Residue p_ = 2;
    std::vector<int> dims_;
    std::vector<FpMatrix> action_;
};

/// Per-vertex blocks of a module homomorphism; block v maps M_v to N_v.
struct RepMap {
    std::vector<FpMatrix> blocks;
};

bool intertwines(const Rep& dom, const Rep& cod, const RepMap& f);
/// Builds a map after checking shapes and the intertwining law.
RepMap make_map(const Rep& dom, const Rep& cod, std::vector<FpMatrix> blocks);
RepMap identity_map(const Rep& m);
RepMap zero_map(const Rep& dom, const Rep& cod);
RepMap compose(const RepMap& g, const RepMap& f);  ///< g after f
RepMap add_maps(const RepMap& f, const RepMap& g);
RepMap scale_map(const RepMap& f, Residue s);
bool is_iso_map(const RepMap& f);
bool is_surjective(const Rep& cod, const RepMap& f);

Rep simple(const AlgebraPtr& alg, Residue p, int v);
Rep projective(const AlgebraPtr& alg, Residue p, int v);
Rep injective(const AlgebraPtr& alg, Residue p, int v);
/// Λ itself as a left module, the direct sum of all indecomposable projectives.
Rep regular(const AlgebraPtr& alg, Residue p);

Rep direct_sum(const AlgebraPtr& alg, Residue p, std::span<const Rep> ms);
Rep direct_sum(const Rep& a, const Rep& b);

struct Submodule {
    Rep module;
    RepMap inclusion;
};

/// Restricts m to the submodule spanned per vertex by the (independent)
/// columns of `bases`; throws if the spans are not closed under the action.
Submodule restrict_to(const Rep& m, std::vector<FpMatrix> bases);

Submodule radical(const Rep& m);
/// J^k m as a submodule of m.
Submodule radical_power(const Rep& m, int k);
/// m / sub for per-vertex subspace bases `sub` of a submodule.
Rep quotient(const Rep& m, const std::vector<FpMatrix>& sub);
Submodule socle(const Rep& m);
std::vector<int> top_dims(const Rep& m);
std::vector<int> socle_dims(const Rep& m);

struct ProjectiveCover {
    Rep projective;
    RepMap epi;
    /// Vertex of each indecomposable summand P_v, in block order.
    std::vector<int> summand_vertices;
    /// For every vertex w, the (summand, path) label of each basis vector of
    /// projective at w, in basis order.
    std::vector<std::vector<std::pair<int, int>>> labels;
};

/// Minimal projective cover; top preimages are chosen greedily from the
/// standard basis so reruns are identical. Throws ZeroModule for m = 0.
ProjectiveCover projective_cover(const Rep& m);

/// ⊕ P_v over the given vertices, with labels filled in.
ProjectiveCover free_module(const AlgebraPtr& alg, Residue p, std::span<const int> vertices);

Submodule syzygy_with_inclusion(const Rep& m);
Rep syzygy(const Rep& m);
Rep syzygy_iter(const Rep& m, int n);

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

/// dim Ext^i(m, n) as cohomology of Hom(P_•, n) for the minimal projective
/// resolution. Throws ResolutionCutoff when i + 1 > cutoff.
int ext_dim(const Rep& m, const Rep& n, int i, int cutoff);
/// dim Ext^i(m, n) for i = 0..max_degree from a single resolution.
std::vector<int> ext_dims(const Rep& m, const Rep& n, int max_degree, int cutoff);

/// Second route for Ext^1: dim Hom(Ωm, n) minus the maps that extend along
/// Ωm -> P0.
int ext1_dim_via_syzygy(const Rep& m, const Rep& n);

/// Dual module D(m) = Hom_k(m, k) over the opposite algebra `target`.
Rep dual(const Rep& m, const AlgebraPtr& target);
Rep dual(const Rep& m);

}  // namespace itdim
