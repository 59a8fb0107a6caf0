#include "ivi/theorems/heine.hpp"

#include <vector>

#include "ivi/engine.hpp"
#include "ivi/errors.hpp"

namespace ivi {

std::optional<Rational> fold_modulus(const std::optional<Rational>& acc,
                                     const std::optional<Rational>& piece,
                                     const Rational& r, const Rational& s) {
    if (!acc) return piece;
    if (!piece) return acc;
    return min(min(*acc, *piece), s - r);
}

RunResult<UniformModulus> uniform_delta(const Expr& f, const ClosedSet& C,
                                        const Interval& I, const Rational& eps,
                                        const EngineConfig& cfg) {
    if (!(Rational(0) < eps)) throw InputError("eps must be positive");

    RunResult<UniformModulus> result;
    const ClosedSet domain = closed_set_intersect(C, I);
    if (domain.empty()) {
        result.certificate = UniformModulus{eps, Rational(1), domain};
        return result;
    }

    const Rational start =
        I.degenerate() ? Rational(1) : I.width();

    // Witness: an engaged value is a modulus valid on the region folded so
    // far; nullopt means the region misses the domain entirely.
    using W = std::optional<Rational>;
    WitnessAlgebra<W> alg;
    alg.ball_oracle = [&](const Rational& s) -> std::optional<Ball<W>> {
        auto dist = domain.distance_to(s);
        if (dist && Rational(0) < *dist) {
            // Off-domain probe: half the distance keeps the ball clear of C.
            return Ball<W>{*dist / Rational(2), W{}};
        }
        auto radius = detail::refine_radius(start, [&](const Rational& r) {
            ClosedSet local = closed_set_intersect(
                domain, Interval(s - r, s + r));
            auto e = detail::enclosure_over(f, local);
            return e && e->width() < eps;
        });
        if (!radius) return std::nullopt;
        return Ball<W>{*radius, W{*radius}};
    };
    alg.combine_overlap = [](const std::optional<W>& acc, const W& piece,
                              const Rational& r, const Rational& s,
                              const Rational&) -> W {
        return fold_modulus(acc ? *acc : W{}, piece, r, s);
    };

    auto run = bisect_cover(I, alg, cfg);
    result.trace = std::move(run.trace);
    if (run.failure) {
        result.failure = detail::from_engine(*run.failure);
        return result;
    }
    // A non-empty domain forces at least one accepted leaf whose probe lies
    // in the domain (an off-domain probe's ball cannot contain domain
    // points), so the fold is engaged here.
    if (!*run.witness) throw std::logic_error("modulus fold lost its value");
    result.certificate = UniformModulus{eps, **run.witness, domain};
    return result;
}

bool verify_modulus(const Expr& f, const UniformModulus& cert) {
    if (!(Rational(0) < cert.delta)) return false;
    if (cert.set.empty()) return true;

    const Rational step = cert.delta / Rational(2);
    std::vector<Rational> pts;
    for (const Interval& comp : cert.set.components()) {
        Rational x = comp.lo;
        while (x < comp.hi) {
            pts.push_back(x);
            x += step;
        }
        pts.push_back(comp.hi);
    }
    std::vector<Rational> vals;
    vals.reserve(pts.size());
    try {
        for (const Rational& x : pts) {
            vals.push_back(eval_rat(f, EvalEnv{x, std::nullopt}));
        }
    } catch (const UndefinedValueError&) {
        return false;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (cert.delta < pts[j] - pts[i]) break;
            if (!(abs(vals[i] - vals[j]) < cert.epsilon)) return false;
        }
    }
    return true;
}

}  // namespace ivi
