#include "ivi/theorems/dini.hpp"

#include <string>

#include "ivi/engine.hpp"
#include "ivi/errors.hpp"

namespace ivi {

namespace {

Rational family_value(const Expr& f_n, const Rational& x, unsigned long n) {
    return eval_rat(f_n, EvalEnv{x, Rational(static_cast<long>(n))});
}

// Smallest index (up to scan_limit) with 0 <= f_n(s) < eps, spot-checking
// nonnegativity and monotonicity along the way.
unsigned long scan_index(const Expr& f_n, const Rational& s,
                         const Rational& eps, unsigned long scan_limit) {
    std::optional<Rational> prev;
    for (unsigned long n = 1; n <= scan_limit; ++n) {
        Rational v = family_value(f_n, s, n);
        if (v < Rational(0)) {
            throw detail::HypothesisSignal{
                s, "negative value at index " + std::to_string(n)};
        }
        if (prev && *prev < v) {
            throw detail::HypothesisSignal{
                s, "family increases from index " + std::to_string(n - 1) +
                       " to " + std::to_string(n)};
        }
        if (v < eps) return n;
        prev = v;
    }
    throw detail::ScanLimitSignal{
        s, family_value(f_n, s, scan_limit),
        "no index up to " + std::to_string(scan_limit) +
            " brings the value below the target"};
}

}  // namespace

RunResult<IndexCertificate> dini_index(const Expr& f_n, const ClosedSet& C,
                                       const Interval& I, const Rational& eps,
                                       unsigned long scan_limit,
                                       const EngineConfig& cfg) {
    if (!(Rational(0) < eps)) throw InputError("eps must be positive");

    RunResult<IndexCertificate> result;
    const ClosedSet domain = closed_set_intersect(C, I);
    if (domain.empty()) {
        result.certificate =
            IndexCertificate{1, IndexCertificate::Role::dini};
        return result;
    }
    const Rational start = I.degenerate() ? Rational(1) : I.width();

    WitnessAlgebra<unsigned long> alg;
    alg.ball_oracle =
        [&](const Rational& s) -> std::optional<Ball<unsigned long>> {
        auto dist = domain.distance_to(s);
        if (dist && Rational(0) < *dist) {
            return Ball<unsigned long>{*dist / Rational(2), 1};
        }
        unsigned long n = scan_index(f_n, s, eps, scan_limit);
        auto radius = detail::refine_radius(start, [&](const Rational& r) {
            ClosedSet local =
                closed_set_intersect(domain, Interval(s - r, s + r));
            auto e = detail::enclosure_over(
                f_n, local, Rational(static_cast<long>(n)));
            return e && !(e->lo() < Rational(0)) && e->hi() < eps;
        });
        if (!radius) return std::nullopt;
        return Ball<unsigned long>{*radius, n};
    };
    alg.combine_overlap = [](const std::optional<unsigned long>& acc,
                              const unsigned long& piece, const Rational&,
                              const Rational&, const Rational&) {
        return fold_index(acc, piece);
    };

    try {
        auto run = bisect_cover(I, alg, cfg);
        result.trace = std::move(run.trace);
        if (run.failure) {
            result.failure = detail::from_engine(*run.failure);
        } else {
            result.certificate = IndexCertificate{
                *run.witness, IndexCertificate::Role::dini};
        }
    } catch (const detail::ScanLimitSignal& sig) {
        RunFailure f;
        f.kind = "scan-limit";
        f.at = sig.at;
        f.residual = sig.residual;
        f.detail = sig.detail;
        result.failure = std::move(f);
    } catch (const detail::HypothesisSignal& sig) {
        RunFailure f;
        f.kind = "hypothesis-violation";
        f.at = sig.at;
        f.detail = sig.detail;
        result.failure = std::move(f);
    }
    return result;
}

bool verify_index(const Expr& f_n, const ClosedSet& C, const Interval& I,
                  const Rational& eps, const IndexCertificate& cert,
                  int grid_exponent) {
    if (cert.n == 0) return false;
    const ClosedSet domain = closed_set_intersect(C, I);
    std::vector<Rational> pts;
    for (const Rational& x : detail::dyadic_grid(I, grid_exponent)) {
        if (domain.contains(x)) pts.push_back(x);
    }
    for (const Interval& comp : domain.components()) {
        pts.push_back(comp.lo);
        pts.push_back(comp.hi);
    }
    try {
        for (const Rational& x : pts) {
            Rational v = family_value(f_n, x, cert.n);
            if (v < Rational(0) || !(v < eps)) return false;
        }
    } catch (const UndefinedValueError&) {
        return false;
    }
    return true;
}

}  // namespace ivi
