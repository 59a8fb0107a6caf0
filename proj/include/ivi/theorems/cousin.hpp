#pragma once

#include "ivi/expr.hpp"
#include "ivi/partition.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

enum class CousinStrategy { creep, bisect };

// Builds a delta-fine tagged partition of I for the gauge g: every cell
// [c_i, c_{i+1}] with tag x_i satisfies x_i in the cell and
// [c_i, c_{i+1}] subseteq [x_i - g(x_i), x_i + g(x_i)].
//
// creep:  marches left to right, each step claiming the cell
//         [s, min(b, s + g(s))] tagged s; on a stall the recovery window at
//         sigma is [sigma - g(sigma), sigma], tagged sigma.
// bisect: refines until a leaf fits inside the ball of one of its probes,
//         then emits that leaf as a single cell tagged by the probe.
RunResult<TaggedPartition> cousin_partition(const Gauge& g, const Interval& I,
                                            CousinStrategy strategy,
                                            const EngineConfig& cfg = {});

// Exact re-check: partition spans I and is delta-fine for g.
bool verify_partition(const TaggedPartition& p, const Gauge& g,
                      const Interval& I);

}  // namespace ivi
