#pragma once

// A computation session: one algebra, one prime, one registry of interned
// classes, and the memo tables derived from it. Sessions are not
// thread-safe; use one per thread.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "itdim/krull_schmidt.hpp"

namespace itdim {

struct SessionConfig {
    Residue prime = 10007;
    int cutoff = 64;
    int ext_window = 16;
    int iso_trials = 8;
    std::uint64_t seed = 0;
    int d_cap = 64;

    /// p must be an odd prime below 2^31; cutoffs and trials at least 1.
    void validate() const;
};

/// Finite(n), Infinite (with a syzygy cycle), or AtLeast(cutoff).
struct PdResult {
    enum class Kind { Finite, Infinite, AtLeast };
    Kind kind = Kind::Finite;
    int value = 0;                   ///< n for Finite, the cutoff for AtLeast
    std::vector<IsoClassId> cycle;   ///< witness for Infinite

    static PdResult finite(int n) { return {Kind::Finite, n, {}}; }
    static PdResult infinite(std::vector<IsoClassId> c) { return {Kind::Infinite, 0, std::move(c)}; }
    static PdResult at_least(int n) { return {Kind::AtLeast, n, {}}; }

    bool is_finite() const { return kind == Kind::Finite; }
    friend bool operator==(const PdResult&, const PdResult&) = default;
};

class Session {
public:
    Session(AlgebraPtr alg, SessionConfig cfg);
    ~Session();
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    const SessionConfig& config() const noexcept { return cfg_; }
    Residue prime() const noexcept { return cfg_.prime; }
    Registry& registry() noexcept { return registry_; }
    const Registry& registry() const noexcept { return registry_; }
    std::mt19937_64& rng() noexcept { return registry_.rng(); }

    Multiset intern(const Rep& m) { return registry_.intern(m); }
    const Multiset& syzygy(IsoClassId id) { return registry_.syzygy(id); }
    const IsoClass& cls(IsoClassId id) const { return registry_.at(id); }
    bool is_projective(IsoClassId id) const { return registry_.at(id).is_projective(); }

    Rep simple(int v) const;
    Rep projective(int v) const;
    Rep injective(int v) const;
    Rep regular() const;
    Rep zero() const { return Rep::zero(alg_, cfg_.prime); }

    IsoClassId simple_class(int v) const { return simple_ids_.at(v); }
    IsoClassId projective_class(int v) const { return projective_ids_.at(v); }
    IsoClassId injective_class(int v) const { return injective_ids_.at(v); }

    const AlgebraPtr& opposite_algebra() const noexcept { return op_alg_; }
    /// Session over the opposite algebra with the same configuration.
    Session& opposite();

    std::map<IsoClassId, PdResult>& pd_memo() noexcept { return pd_memo_; }

private:
    AlgebraPtr alg_;
    AlgebraPtr op_alg_;
    SessionConfig cfg_;
    Registry registry_;
    std::vector<IsoClassId> simple_ids_, projective_ids_, injective_ids_;
    std::unique_ptr<Session> opposite_;
    std::map<IsoClassId, PdResult> pd_memo_;
};

}  // namespace itdim
