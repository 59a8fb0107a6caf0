#include "ivi/theorems/cousin.hpp"

#include "ivi/engine.hpp"

namespace ivi {

namespace {

TaggedPartition single_cell(const Rational& lo, const Rational& hi,
                            const Rational& tag) {
    return TaggedPartition{{lo, hi}, {tag}};
}

RunResult<TaggedPartition> run_creep(const Gauge& g, const Interval& I,
                                     const EngineConfig& cfg) {
    WitnessAlgebra<TaggedPartition> alg;
    alg.point_witness = [](const Rational& x) {
        return TaggedPartition{{x}, {}};
    };
    alg.combine_adjacent = [](const TaggedPartition& a,
                               const TaggedPartition& b) {
        return concat(a, b);
    };
    alg.right_oracle =
        [&](const Rational& s) -> std::optional<RightStep<TaggedPartition>> {
        Rational t = min(I.hi, s + g(s));
        return RightStep<TaggedPartition>{t, single_cell(s, t, s)};
    };
    alg.left_oracle =
        [&](const Rational& sigma) -> std::optional<LeftRecovery<TaggedPartition>> {
        LeftRecovery<TaggedPartition> rec;
        rec.window_lo = sigma - g(sigma);
        rec.piece_for = [sigma](const Rational& x)
            -> std::optional<TaggedPartition> {
            return single_cell(x, sigma, sigma);
        };
        return rec;
    };

    auto run = creep(I, alg, cfg);
    RunResult<TaggedPartition> result;
    result.trace = std::move(run.trace);
    if (run.failure) {
        result.failure = detail::from_engine(*run.failure);
    } else {
        result.certificate = std::move(run.witness);
    }
    return result;
}

RunResult<TaggedPartition> run_bisect(const Gauge& g, const Interval& I,
                                      const EngineConfig& cfg) {
    WitnessAlgebra<TaggedPartition> alg;
    alg.ball_oracle =
        [&](const Rational& s) -> std::optional<Ball<TaggedPartition>> {
        Rational radius = g(s);
        Rational lo = max(I.lo, s - radius);
        Rational hi = min(I.hi, s + radius);
        TaggedPartition piece = lo == hi ? TaggedPartition{{lo}, {}}
                                         : single_cell(lo, hi, s);
        return Ball<TaggedPartition>{radius, piece};
    };
    // The accepted leaf [s, t] sits inside the probe's ball, so trimming the
    // piece to exactly the leaf keeps it delta-fine while making adjacent
    // pieces concatenable.
    alg.combine_overlap = [&](const std::optional<TaggedPartition>& acc,
                               const TaggedPartition& piece, const Rational&,
                               const Rational& s, const Rational& t) {
        Rational tag = piece.tags.empty() ? s : piece.tags.front();
        TaggedPartition cell =
            s == t ? TaggedPartition{{s}, {}} : single_cell(s, t, tag);
        return acc ? concat(*acc, cell) : cell;
    };

    auto run = bisect_cover(I, alg, cfg);
    RunResult<TaggedPartition> result;
    result.trace = std::move(run.trace);
    if (run.failure) {
        result.failure = detail::from_engine(*run.failure);
    } else {
        result.certificate = std::move(*run.witness);
    }
    return result;
}

}  // namespace

RunResult<TaggedPartition> cousin_partition(const Gauge& g, const Interval& I,
                                            CousinStrategy strategy,
                                            const EngineConfig& cfg) {
    return strategy == CousinStrategy::creep ? run_creep(g, I, cfg)
                                             : run_bisect(g, I, cfg);
}

bool verify_partition(const TaggedPartition& p, const Gauge& g,
                      const Interval& I) {
    if (p.cuts.empty()) return false;
    if (!(p.cuts.front() == I.lo) || !(p.cuts.back() == I.hi)) return false;
    return is_delta_fine(p, g);
}

}  // namespace ivi
