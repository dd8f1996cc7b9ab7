#pragma once

// Projective and injective dimension on the syzygy graph, fin.dim of
// add-classes, resolution dimension in a D-class, Ext windows, cotilting
// checks.

#include <set>
#include <string>
#include <vector>

#include "itdim/igusa_todorov.hpp"

namespace itdim {

PdResult pd_class(Session& s, IsoClassId id, int cutoff);
PdResult pd(Session& s, const Multiset& ms, int cutoff);
PdResult pd(Session& s, const Rep& m, int cutoff);

/// Join in the order Finite < AtLeast < Infinite, maxima within a kind.
PdResult pd_join(const PdResult& a, const PdResult& b);

/// Largest finite pd among the classes, 0 if none. Throws PdUndetermined
/// when some class is only known to have pd ≥ cutoff.
int findim_classes(Session& s, const std::set<IsoClassId>& ids, int cutoff);
int findim_add(Session& s, const Rep& m, int cutoff);

PdResult injdim(Session& s, const Rep& m, int cutoff);

/// Least k ≤ cutoff with every summand of Ω^k in D; AtLeast(cutoff) if none.
PdResult resdim_in_D(Session& s, const Multiset& ms, const DClass& d, int cutoff);
PdResult resdim_in_D(Session& s, const Rep& m, const DClass& d, int cutoff);

/// Ext^i(m, n) = 0 for lo ≤ i ≤ hi. Throws ResolutionCutoff if hi + 1 > cutoff.
bool ext_window_zero(const Rep& m, const Rep& n, int lo, int hi, int cutoff);

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

struct CotiltingReport {
    Verdict finite_injdim = Verdict::Inconclusive;
    PdResult injdim;
    Verdict self_orthogonal = Verdict::Inconclusive;
    int ext_checked_up_to = 0;
    Verdict injectives_resolved = Verdict::Inconclusive;
    /// add(T)-resolution length per injective I_v, -1 when not found.
    std::vector<int> resolution_lengths;

    Verdict overall() const;
};

CotiltingReport check_cotilting(Session& s, const Rep& t, int cutoff);

}  // namespace itdim
