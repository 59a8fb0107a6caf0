#pragma once

#include "ivi/expr.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// Local boundedness propagates: cover I with balls on which the enclosure
// of f is determinate, fold the per-ball |f| bounds with max. Fails with
// depth-limit localizing any point near which f is unbounded.
RunResult<BoundCertificate> bound_on(const Expr& f, const Interval& I,
                                     const EngineConfig& cfg = {});

// M dominates |f| at 10^4 + 1 grid points (exact evaluation); any
// evaluation error or exceedance refutes the certificate.
bool verify_bound(const Expr& f, const BoundCertificate& cert);

// A zero-free enclosure-evaluable function has one sign: cover I with balls
// on which the enclosure of f excludes zero, check sign agreement while
// folding. Fails with depth-limit localizing a zero (or near-zero) of f.
RunResult<SignCertificate> constant_sign(const Expr& f, const Interval& I,
                                         const EngineConfig& cfg = {});

// The claimed sign holds at 10^3 + 1 grid points (exact evaluation).
bool verify_sign(const Expr& f, const SignCertificate& cert);

}  // namespace ivi
