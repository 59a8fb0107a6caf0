#pragma once

#include "ivi/expr.hpp"
#include "ivi/sets.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// For a family f_n (expression in x and n, asserted by the caller to be
// nonnegative, decreasing in n, and pointwise -> 0 on C), finds one index N
// with 0 <= f_N(x) < eps for all x in C ∩ I, by covering I with balls on
// which some scanned index already works and taking the max.
//
// Hypotheses are spot-checked at probe points: a negative value or an
// increase f_{n}(s) > f_{n-1}(s) reports hypothesis-violation; no index
// <= scan_limit working at a probe reports scan-limit with the residual
// value f_{scan_limit}(s).
RunResult<IndexCertificate> dini_index(const Expr& f_n, const ClosedSet& C,
                                       const Interval& I, const Rational& eps,
                                       unsigned long scan_limit = 10000,
                                       const EngineConfig& cfg = {});

// Grid re-check: 0 <= f_N(x) < eps at dyadic grid points of I that lie in C
// plus all component endpoints of C ∩ I.
bool verify_index(const Expr& f_n, const ClosedSet& C, const Interval& I,
                  const Rational& eps, const IndexCertificate& cert,
                  int grid_exponent = 10);

}  // namespace ivi
