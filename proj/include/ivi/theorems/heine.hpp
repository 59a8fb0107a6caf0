#pragma once

#include "ivi/expr.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// Pointwise continuity upgrades to a uniform modulus: cover I with balls on
// which the enclosure of f over C varies less than eps, folding moduli with
// the exact three-way rule min{delta_1, delta_2, s - r} (r = the known
// overlap point). Probes outside C contribute no constraint. Empty C ∩ I
// yields the vacuous modulus delta = 1.
//
// Failure depth-limit localizes a leaf on which f refuses to settle below
// eps at any refinement — the uniform-continuity obstruction.
RunResult<UniformModulus> uniform_delta(const Expr& f, const ClosedSet& C,
                                        const Interval& I, const Rational& eps,
                                        const EngineConfig& cfg = {});

// The exact fold rule, exposed for direct checking: nullopt means "no
// constraint" (a piece whose ball missed C).
std::optional<Rational> fold_modulus(const std::optional<Rational>& acc,
                                     const std::optional<Rational>& piece,
                                     const Rational& r, const Rational& s);

// Exhaustive pair check on a grid of spacing <= delta/2 over each component
// (all components pooled, so cross-component pairs are checked too):
// every pair within delta satisfies |f(x) - f(y)| < epsilon exactly.
bool verify_modulus(const Expr& f, const UniformModulus& cert);

}  // namespace ivi
