#pragma once

#include "ivi/expr.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// Local increase propagates: grow a strictly increasing chain from a to b.
// The forward oracle scans a dyadic grid of density 2^search_grid over
// [a, b] for the nearest point above the current reach where f strictly
// increases; the recovery oracle jumps over stall points via an exact
// f(reach) < f(sigma) comparison. a_b must lie inside the ambient domain
// c_d (InputError otherwise).
//
// Failure oracle-failure(s): no examined point right of s improves on f(s)
// — a grid-resolution witness against the increase hypothesis at s.
RunResult<MonotoneChain> strict_increase(const Expr& f, const Interval& c_d,
                                         const Interval& a_b, unsigned long search_grid,
                                         const EngineConfig& cfg = {});

// Chain spans a_b, points strictly increasing, every value equals f at its
// point exactly, values strictly increasing.
bool verify_chain(const Expr& f, const MonotoneChain& chain, const Interval& a_b);

// One-sided difference-quotient bound at s over a dyadic grid of density
// 2^grid between s and r_or_t. lower-left takes the grid infimum over
// [r_or_t, s[, upper-right the attained grid supremum over ]s, r_or_t].
// Throws EmptyWindowError when r_or_t == s, InputError when it lies on the
// wrong side.
DiniDerivateBound dini_derivate_bound(const Expr& f, const Rational& s,
                                      DiniDerivateBound::Kind kind,
                                      const Rational& r_or_t, unsigned long grid);

bool verify_derivate(const Expr& f, const DiniDerivateBound& cert, unsigned long grid);

// f(a) <= f(b) + eps(b - a), certified by running strict_increase on the
// tilted function f(x) + eps*x (eps > 0 required). Oracle failure refutes
// the underlying derivate hypothesis at grid resolution near the reported
// point.
RunResult<TiltCertificate> increase_via_tilt(const Expr& f, const Interval& a_b,
                                             const Rational& eps,
                                             unsigned long search_grid,
                                             const EngineConfig& cfg = {});

bool verify_tilt(const Expr& f, const TiltCertificate& cert);

}  // namespace ivi
