#include "ivi/theorems/bound_sign.hpp"

namespace ivi {

namespace {

// Window [a,b] ∩ [s-δ, s+δ] as an Enclosure for evaluation.
Enclosure window(const Interval& I, const Rational& s, const Rational& radius) {
    return Enclosure(max(I.lo, s - radius), min(I.hi, s + radius));
}

Rational max_abs(const Enclosure& e) { return max(abs(e.lo()), abs(e.hi())); }

}  // namespace

RunResult<BoundCertificate> bound_on(const Expr& f, const Interval& I,
                                     const EngineConfig& cfg) {
    WitnessAlgebra<Rational> alg;
    Rational start = I.degenerate() ? Rational(1) : I.width();
    alg.ball_oracle = [&f, &I, start](const Rational& s) -> std::optional<Ball<Rational>> {
        std::optional<Enclosure> found;
        auto radius = detail::refine_radius(start, [&](const Rational& r) {
            found = eval_enclosure(f, window(I, s, r));
            return found.has_value();
        });
        if (!radius) return std::nullopt;  // still indeterminate: unbounded nearby?
        return Ball<Rational>{*radius, max_abs(*found)};
    };
    alg.combine_overlap = [](const std::optional<Rational>& acc, const Rational& piece,
                             const Rational&, const Rational&, const Rational&) {
        return acc ? max(*acc, piece) : piece;
    };

    auto outcome = bisect_cover(I, alg, cfg);
    RunResult<BoundCertificate> result;
    result.trace = std::move(outcome.trace);
    if (!outcome.ok()) {
        result.failure = detail::from_engine(*outcome.failure);
        return result;
    }
    result.certificate = BoundCertificate{std::move(*outcome.witness), I};
    return result;
}

bool verify_bound(const Expr& f, const BoundCertificate& cert) {
    // ceil(10^4 / 2^k) grids don't land on 10^4 exactly; 2^14 + 1 > 10^4 + 1
    // points strengthens the check while keeping spacing dyadic.
    for (const Rational& x : detail::dyadic_grid(cert.interval, 14)) {
        try {
            if (abs(eval_rat(f, EvalEnv{x, {}})) > cert.M) return false;
        } catch (const UndefinedValueError&) {
            return false;  // f not even defined at a grid point
        }
    }
    return true;
}

RunResult<SignCertificate> constant_sign(const Expr& f, const Interval& I,
                                         const EngineConfig& cfg) {
    using Sign = SignCertificate::Sign;
    WitnessAlgebra<Sign> alg;
    Rational start = I.degenerate() ? Rational(1) : I.width();
    alg.ball_oracle = [&f, &I, start](const Rational& s) -> std::optional<Ball<Sign>> {
        std::optional<Enclosure> found;
        auto radius = detail::refine_radius(start, [&](const Rational& r) {
            found = eval_enclosure(f, window(I, s, r));
            return found && found->sign_definite();
        });
        if (!radius) return std::nullopt;  // zero not excluded at any refinement
        return Ball<Sign>{*radius,
                          found->lo().sign() > 0 ? Sign::positive : Sign::negative};
    };
    alg.combine_overlap = [](const std::optional<Sign>& acc, const Sign& piece,
                             const Rational&, const Rational&, const Rational&) {
        if (acc && *acc != piece)
            throw std::logic_error(
                "adjacent overlapping pieces disagree on sign; a sound "
                "enclosure oracle cannot produce this");
        return piece;
    };

    auto outcome = bisect_cover(I, alg, cfg);
    RunResult<SignCertificate> result;
    result.trace = std::move(outcome.trace);
    if (!outcome.ok()) {
        result.failure = detail::from_engine(*outcome.failure);
        return result;
    }
    result.certificate = SignCertificate{*outcome.witness, I};
    return result;
}

bool verify_sign(const Expr& f, const SignCertificate& cert) {
    int want = cert.sign == SignCertificate::Sign::positive ? 1 : -1;
    for (const Rational& x : detail::dyadic_grid(cert.interval, 10)) {
        try {
            if (eval_rat(f, EvalEnv{x, {}}).sign() != want) return false;
        } catch (const UndefinedValueError&) {
            return false;
        }
    }
    return true;
}

}  // namespace ivi
