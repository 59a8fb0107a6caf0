#pragma once

#include <vector>

#include "ivi/sets.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// For a finite decreasing family C_1 ⊇ C_2 ⊇ ... whose intersection with I
// is claimed empty, produces one index N with C_N ∩ I = ∅: each probe s
// escapes some member (first index whose set misses s), the ball keeps that
// member away, and indices fold by max. A probe contained in every listed
// member — or a spot-checked non-inclusion between consecutive members —
// reports hypothesis-violation.
RunResult<IndexCertificate> cantor_empty_index(
    const std::vector<ClosedSet>& family, const Interval& I,
    const EngineConfig& cfg = {});

// Exact re-check: C_N ∩ I is empty.
bool verify_empty_index(const std::vector<ClosedSet>& family,
                        const Interval& I, const IndexCertificate& cert);

}  // namespace ivi
