#include "ivi/theorems/heine_borel.hpp"

#include <algorithm>

#include "ivi/engine.hpp"

namespace ivi {

RunResult<SubcoverCertificate> finite_subcover(const OpenCover& O,
                                               const ClosedSet& C,
                                               const Interval& I,
                                               const EngineConfig& cfg) {
    RunResult<SubcoverCertificate> result;
    const ClosedSet domain = closed_set_intersect(C, I);
    if (domain.empty()) {
        result.certificate = SubcoverCertificate{{}};
        return result;
    }

    using W = std::vector<std::size_t>;  // sorted, unique member indices
    WitnessAlgebra<W> alg;
    alg.ball_oracle = [&](const Rational& s) -> std::optional<Ball<W>> {
        auto dist = domain.distance_to(s);
        if (dist && Rational(0) < *dist) {
            return Ball<W>{*dist / Rational(2), W{}};
        }
        auto member = cover_member_containing(O, s);
        if (!member) return std::nullopt;  // uncovered domain point
        // Half the containment margin keeps the closed ball strictly inside
        // the open member, so every point of an accepted leaf is covered.
        return Ball<W>{member->second / Rational(2), W{member->first}};
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
    result.trace = std::move(run.trace);
    if (run.failure) {
        result.failure = detail::from_engine(*run.failure);
    } else {
        result.certificate = SubcoverCertificate{std::move(*run.witness)};
    }
    return result;
}

bool verify_subcover(const OpenCover& O, const SubcoverCertificate& cert,
                     const ClosedSet& C) {
    std::vector<OpenIntervalSpec> chosen;
    for (std::size_t idx : cert.member_indices) {
        if (O.members.size() <= idx) return false;
        chosen.push_back(O.members[idx]);
    }
    for (const Interval& comp : C.components()) {
        Rational p = comp.lo;
        while (true) {
            // Largest reach among chosen members strictly containing p.
            std::optional<Rational> reach;
            for (const OpenIntervalSpec& m : chosen) {
                if (m.lo < p && p < m.hi && (!reach || *reach < m.hi)) {
                    reach = m.hi;
                }
            }
            if (!reach) return false;   // p itself is uncovered
            if (comp.hi < *reach) break;  // whole tail of the component done
            p = *reach;
        }
    }
    return true;
}

}  // namespace ivi
