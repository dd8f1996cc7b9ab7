#include "itdim/session.hpp"

#include "itdim/errors.hpp"

namespace itdim {

void SessionConfig::validate() const {
    if (prime < 3 || prime >= (Residue{1} << 31) || !is_prime(prime))
        throw Error(ErrorCode::InvalidArgument, "prime must be an odd prime below 2^31, got " + std::to_string(prime));
    if (cutoff < 1) throw Error(ErrorCode::InvalidArgument, "cutoff must be at least 1");
    if (ext_window < 1) throw Error(ErrorCode::InvalidArgument, "ext window must be at least 1");
    if (iso_trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    if (d_cap < 1) throw Error(ErrorCode::InvalidArgument, "d-cap must be at least 1");
}

namespace {

SessionConfig checked(SessionConfig cfg) {
    cfg.validate();
    return cfg;
}

}  // namespace

Session::Session(AlgebraPtr alg, SessionConfig cfg)
    : alg_(std::move(alg)),
      op_alg_(Algebra::create(itdim::opposite(alg_->presentation()))),
      cfg_(checked(cfg)),
      registry_(alg_, cfg_.prime, cfg_.iso_trials, cfg_.seed) {
    const int n = alg_->vertices();
    // Fixed interning order keeps class ids stable across runs.
    for (int v = 0; v < n; ++v) {
        projective_ids_.push_back(registry_.intern_indecomposable(projective(v)));
        registry_.add_name(projective_ids_.back(), "P" + std::to_string(v + 1));
    }
    for (int v = 0; v < n; ++v) {
        simple_ids_.push_back(registry_.intern_indecomposable(simple(v)));
        registry_.add_name(simple_ids_.back(), "S" + std::to_string(v + 1));
    }
    for (int v = 0; v < n; ++v) {
        injective_ids_.push_back(registry_.intern_indecomposable(injective(v)));
        registry_.add_name(injective_ids_.back(), "I" + std::to_string(v + 1));
    }
}

Session::~Session() = default;

Rep Session::simple(int v) const { return itdim::simple(alg_, cfg_.prime, v); }
Rep Session::projective(int v) const { return itdim::projective(alg_, cfg_.prime, v); }
Rep Session::injective(int v) const { return dual(itdim::projective(op_alg_, cfg_.prime, v), alg_); }
Rep Session::regular() const { return itdim::regular(alg_, cfg_.prime); }

Session& Session::opposite() {
    if (!opposite_) opposite_ = std::make_unique<Session>(op_alg_, cfg_);
    return *opposite_;
}

}  // namespace itdim
