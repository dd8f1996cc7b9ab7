#pragma once

// Krull-Schmidt decomposition, isomorphism tests and the registry of
// interned indecomposable iso-classes.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "itdim/repmod.hpp"

namespace itdim {

/// Isomorphism invariants. Hom(P_v, M) and Hom(M, I_v) both have dimension
/// dim M_v, so the dimension vector already covers them.
struct Fingerprint {
    std::vector<int> dims;
    std::vector<int> top;
    std::vector<int> socle;
    int end_dim = 0;
    int rad_end_dim = 0;

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

struct EndInfo {
    std::vector<RepMap> basis;
    int radical_dim = 0;  ///< dimension of the trace-form radical
};

/// End(m) with its trace-form radical. Throws PrimeTooSmall unless
/// p > max(dim End, dim m).
EndInfo endomorphism_info(const Rep& m);

Fingerprint fingerprint(const Rep& m);

/// Indecomposable summands of m (multiset, unsorted). Every summand carries a
/// locality certificate; the sum of inclusions is checked to be an iso.
std::vector<Rep> decompose(const Rep& m, std::mt19937_64& rng, int trial_budget = 64);

enum class IsoVerdict { Yes, No, Undecided };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::No;
    std::optional<RepMap> witness;   ///< set for Yes
    double failure_bound = 0.0;      ///< (d/p)^T for Undecided
};

/// Both arguments must be indecomposable. With exact_fallback the answer is
/// never Undecided: products g∘f over Hom bases span End, so one of them is
/// invertible exactly when m ≅ n.
IsoResult is_iso(const Rep& m, const Rep& n, std::mt19937_64& rng, int trials, bool exact_fallback = true);

using IsoClassId = int;
/// (class, multiplicity) pairs sorted by id, multiplicities positive.
using Multiset = std::vector<std::pair<IsoClassId, int>>;

Multiset add_multisets(const Multiset& a, const Multiset& b);

struct IsoClass {
    IsoClassId id = -1;
    Fingerprint fingerprint;
    Rep representative;
    int projective_vertex = -1;  ///< v when the class is P_v
    std::vector<std::string> names;
    std::optional<Multiset> syzygy;

    bool is_projective() const { return projective_vertex >= 0; }
};

class Registry {
public:
    Registry(AlgebraPtr alg, Residue p, int iso_trials, std::uint64_t seed, bool exact_fallback = true);

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    Residue prime() const noexcept { return p_; }
    std::mt19937_64& rng() noexcept { return rng_; }

    Multiset intern(const Rep& m);
    /// m must already be known to be indecomposable.
    IsoClassId intern_indecomposable(const Rep& m);

    /// Ω of the class, interned and memoized (the syzygy graph edge list).
    const Multiset& syzygy(IsoClassId id);

    const IsoClass& at(IsoClassId id) const { return classes_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(classes_.size()); }
    const std::vector<IsoClass>& classes() const noexcept { return classes_; }

    void add_name(IsoClassId id, const std::string& name);
    std::string label(IsoClassId id) const;

    /// Direct sum of representatives with multiplicity.
    Rep realize(const Multiset& ms) const;

private:
    AlgebraPtr alg_;
    Residue p_;
    int trials_;
    bool exact_fallback_;
    std::mt19937_64 rng_;
    std::vector<IsoClass> classes_;
    std::map<Fingerprint, std::vector<IsoClassId>> buckets_;
};

}  // namespace itdim
