#pragma once

#include <vector>

#include "ivi/sets.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// Certified enumeration of F ∩ I for a finite point set F: covers I with
// balls, each reporting exactly the points of F it contains, and returns the
// sorted union. The cover is what certifies completeness — no point of
// F ∩ I can hide between balls. Each listed point is isolated in F by
// construction (at an in-F probe the ball radius is the separation radius).
RunResult<std::vector<Rational>> enumerate_isolated(const PointSet& F,
                                                    const Interval& I,
                                                    const EngineConfig& cfg = {});

// Exact re-check against the direct filter of F by membership in I.
bool verify_points(const PointSet& F, const Interval& I,
                   const std::vector<Rational>& points);

}  // namespace ivi
