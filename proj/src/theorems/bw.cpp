#include "ivi/theorems/bw.hpp"

#include <algorithm>

#include "ivi/engine.hpp"

namespace ivi {

RunResult<std::vector<Rational>> enumerate_isolated(const PointSet& F,
                                                    const Interval& I,
                                                    const EngineConfig& cfg) {
    using W = std::vector<Rational>;  // sorted, unique points of F ∩ I
    WitnessAlgebra<W> alg;
    alg.ball_oracle = [&](const Rational& s) -> std::optional<Ball<W>> {
        Rational radius(1);
        if (F.contains(s)) {
            radius = separation_radius(F, s);
        } else if (!F.points().empty()) {
            std::vector<Rational> ds;
            ds.reserve(F.points().size());
            for (const Rational& p : F.points()) ds.push_back(abs(p - s));
            std::sort(ds.begin(), ds.end());
            // Reach past the nearest point but stay clear of the second
            // nearest (ties land exactly on the ball boundary, which the
            // membership filter below still picks up).
            radius = ds.size() == 1 ? ds[0] + Rational(1)
                                    : (ds[0] + ds[1]) / Rational(2);
        }
        W inside;
        for (const Rational& p : F.points()) {
            if (!(radius < abs(p - s)) && I.contains(p)) inside.push_back(p);
        }
        return Ball<W>{radius, inside};
    };
    alg.combine_overlap = [](const std::optional<W>& acc, const W& piece,
                              const Rational&, const Rational&,
                              const Rational&) {
        if (!acc) return piece;
        W merged;
        std::set_union(acc->begin(), acc->end(), piece.begin(), piece.end(),
                       std::back_inserter(merged));
        return merged;
    };

    auto run = bisect_cover(I, alg, cfg);
    RunResult<std::vector<Rational>> result;
    result.trace = std::move(run.trace);
    if (run.failure) {
        result.failure = detail::from_engine(*run.failure);
    } else {
        result.certificate = std::move(*run.witness);
    }
    return result;
}

bool verify_points(const PointSet& F, const Interval& I,
                   const std::vector<Rational>& points) {
    std::vector<Rational> expected;
    for (const Rational& p : F.points()) {
        if (I.contains(p)) expected.push_back(p);
    }
    return points == expected;
}

}  // namespace ivi
