#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivi/engine.hpp"
#include "ivi/expr.hpp"
#include "ivi/interval.hpp"
#include "ivi/rational.hpp"
#include "ivi/sets.hpp"
#include "ivi/trace.hpp"

namespace ivi {

// Uniform failure record across theorem instances. `kind` extends the
// engine's reasons with instance-level outcomes:
//   stall-no-recovery, step-limit, depth-limit, oracle-failure  (engine)
//   scan-limit            — an index scan exhausted its budget at `at`,
//                           `residual` is the last value seen
//   hypothesis-violation  — input data contradicts a theorem hypothesis
//                           at `at` (detail says which)
struct RunFailure {
    std::string kind;
    std::optional<Rational> at;
    std::optional<Interval> leaf;
    std::optional<Rational> sup_estimate;
    std::optional<Rational> residual;
    std::string detail;
};

template <class C>
struct RunResult {
    std::optional<C> certificate;
    std::optional<RunFailure> failure;
    Trace trace;
    bool ok() const { return certificate.has_value(); }
};

// The index fold shared by the family-index instances (Dini, nested-family
// emptiness), exposed for direct checking: indices combine by max, and
// nullopt means "nothing folded yet".
unsigned long fold_index(const std::optional<unsigned long>& acc,
                         unsigned long piece);

namespace detail {

inline RunFailure from_engine(const EngineFailure& f) {
    RunFailure r;
    r.kind = f.reason;
    r.at = f.at;
    r.leaf = f.leaf;
    r.sup_estimate = f.sup_estimate;
    return r;
}

// Thrown by instance oracles; caught by the instance wrapper and converted
// into a RunFailure. Plain structs: these never cross the library boundary.
struct ScanLimitSignal {
    Rational at;
    Rational residual;
    std::string detail;
};
struct HypothesisSignal {
    Rational at;
    std::string detail;
};

// Halve `radius` until `good(radius)` holds; nullopt after 128 halvings
// (the caller treats that as an inconclusive probe). `radius` must be
// positive.
std::optional<Rational> refine_radius(Rational radius,
                                      const std::function<bool(const Rational&)>& good);

// 2^k + 1 equally spaced points covering I (just {lo} when degenerate).
std::vector<Rational> dyadic_grid(const Interval& I, unsigned long k);

// Enclosure of f over all components of S, hulled; nullopt when S is empty
// or any component's enclosure is indeterminate.
std::optional<Enclosure> enclosure_over(const Expr& f, const ClosedSet& S,
                                        const std::optional<Rational>& n = {});

}  // namespace detail
}  // namespace ivi
