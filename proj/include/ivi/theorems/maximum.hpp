#pragma once

#include "ivi/expr.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

struct SearchBudget {
    unsigned long grid_exponent = 10;  // examine a dyadic grid of 2^k + 1 points
};

// Budget-relative argmax over C ∩ I, by contradiction: assume every point
// is beaten somewhere on the budget grid and cover I with balls on which f
// stays below the best grid value. The cover attempt must fail — and does
// so constructively, aborting at a probe s that no examined point beats;
// that s (or the grid optimum itself) is the returned candidate.
//
// Throws EmptyDomainError when C ∩ I is empty. Approximate by design: the
// candidate is maximal only relative to the examined points.
RunResult<ArgmaxCandidate> usc_max(const Expr& f, const ClosedSet& C, const Interval& I,
                                   const SearchBudget& budget = {},
                                   const EngineConfig& cfg = {});

// point ∈ C ∩ I, value = f(point) exactly, and no point of the budget grid
// (restricted to C, plus the component endpoints of C ∩ I) has a strictly
// larger value.
bool verify_argmax(const Expr& f, const ClosedSet& C, const Interval& I,
                   const ArgmaxCandidate& cert);

}  // namespace ivi
