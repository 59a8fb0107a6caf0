#pragma once

#include "ivi/sets.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// Extracts a finite subcover: indices into O.members whose union contains
// C ∩ I. Probes inside the domain locate a covering member (with its
// containment margin as ball radius); probes outside use half the distance
// to the domain. A domain probe lying in no member is inconclusive, so an
// uncovered region surfaces as depth-limit with a localizing leaf.
RunResult<SubcoverCertificate> finite_subcover(const OpenCover& O,
                                               const ClosedSet& C,
                                               const Interval& I,
                                               const EngineConfig& cfg = {});

// Exact sweep: the selected open members jointly contain every component of
// C. Out-of-range indices fail.
bool verify_subcover(const OpenCover& O, const SubcoverCertificate& cert,
                     const ClosedSet& C);

}  // namespace ivi
