#pragma once

// The free abelian group K on indecomposable classes, its quotient K_D by a
// syzygy-closed class D, the induced syzygy operator, Fitting's η, and the
// functions Φ, Ψ, Φ_[D], Ψ_[D].

#include <map>
#include <set>
#include <string>
#include <vector>

#include "itdim/session.hpp"

namespace itdim {

/// Sparse integer combination of iso-classes; zero coefficients never stored.
using KVec = std::map<IsoClassId, BigInt>;

KVec kvec_of(const Multiset& ms);
KVec unit_kvec(IsoClassId id);

/// A syzygy-closed, add-closed class given by its finite set of
/// indecomposable classes. Projectives always count as members. `everything`
/// stands for all of mod Λ.
struct DClass {
    std::vector<IsoClassId> generators;
    std::set<IsoClassId> closure;
    bool everything = false;
    std::string description;

    bool contains(const Registry& r, IsoClassId id) const {
        return everything || closure.count(id) > 0 || r.at(id).is_projective();
    }
};

/// D = add Λ, the classical case.
DClass projectives_only(Session& s);
/// D = mod Λ; `known` lists the indecomposable classes available for
/// class-level evaluations (the complete list when representation-finite).
DClass all_modules(Session& s, const std::set<IsoClassId>& known);

/// Interns the generators and adjoins syzygy summands until a fixpoint.
/// The closure always lists every indecomposable projective. Throws
/// ClosureCutoff when more than `cutoff` classes accumulate.
DClass d_closure(Session& s, const std::vector<Rep>& gens, int cutoff);
DClass d_closure_of_classes(Session& s, const std::vector<IsoClassId>& gens, int cutoff);

KVec project_kvec(const Session& s, const KVec& v, const DClass& d);
/// L̄[id] = [Ω id] + ⟨D⟩.
KVec L_bar(Session& s, IsoClassId id, const DClass& d);
KVec L_bar(Session& s, const KVec& v, const DClass& d);

/// Rank over ℚ of the coordinate matrix of a family of K-vectors.
int kvec_rank(const std::vector<KVec>& family);

struct FittingReport {
    std::vector<std::vector<KVec>> steps;  ///< steps[m] = L̄^m of the generators
    std::vector<int> ranks;                ///< r_0, ..., r_K
    int eta = 0;                           ///< least k with r_k = r_K
    int confirmation_rank = 0;             ///< r_{K+1}
};

/// Iterates L̄ until the rank is provably stable: the rank reaches 0, a step
/// repeats, or K equals the number of classes reachable from the generators
/// (beyond that the images lie in the part where L̄ is invertible). A plateau
/// r_k = r_{k+1} alone does not suffice: S -> S' -> 0 has ranks 1, 1, 0.
/// Throws OrbitCutoff when too many classes are reachable.
FittingReport fitting_eta(Session& s, const std::vector<KVec>& gens, const DClass& d);

/// One unit generator per distinct summand class of m.
std::vector<KVec> summand_generators(const Multiset& ms);

int phi_D(Session& s, const Rep& m, const DClass& d, FittingReport* report = nullptr);
int phi_D(Session& s, const Multiset& ms, const DClass& d, FittingReport* report = nullptr);
int psi_D(Session& s, const Rep& m, const DClass& d);
int psi_D(Session& s, const Multiset& ms, const DClass& d);
int phi(Session& s, const Rep& m);
int psi(Session& s, const Rep& m);

/// Classes occurring in Ω^k of the multiset.
std::set<IsoClassId> syzygy_classes(Session& s, const Multiset& ms, int k);
Multiset syzygy_multiset(Session& s, const Multiset& ms, int k);

enum class ItFunction { Phi, Psi, PhiD, PsiD };

/// max over the list; sup ∅ = 0.
int gamma_dim(Session& s, const std::vector<Rep>& ms, ItFunction which, const DClass& d);

/// Φ and Ψ of the direct sum of every closure representative. By additivity
/// on add-classes this is the dimension of the finite class add(closure).
int phi_dim_of(Session& s, const DClass& d);
int psi_dim_of(Session& s, const DClass& d);

/// Multiset with one copy of each class in the set.
Multiset multiset_of(const std::set<IsoClassId>& ids);

/// Process-wide tally of Fitting reports and of those whose rank sequence
/// increased or whose confirmation step changed the rank.
struct FittingAudit {
    long long reports = 0;
    long long violations = 0;
};
FittingAudit fitting_audit();

}  // namespace itdim
