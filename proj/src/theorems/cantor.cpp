#include "ivi/theorems/cantor.hpp"

#include <string>

#include "ivi/engine.hpp"
#include "ivi/errors.hpp"

namespace ivi {

RunResult<IndexCertificate> cantor_empty_index(
    const std::vector<ClosedSet>& family, const Interval& I,
    const EngineConfig& cfg) {
    if (family.empty()) throw InputError("family must list at least one set");

    // 1-based index of the first member missing s.
    auto escape = [&](const Rational& s) -> unsigned long {
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (!family[i].contains(s)) {
                if (0 < i && !family[i].subset_of(family[i - 1])) {
                    throw detail::HypothesisSignal{
                        s, "family not decreasing between indices " +
                               std::to_string(i) + " and " +
                               std::to_string(i + 1)};
                }
                return i + 1;
            }
        }
        throw detail::HypothesisSignal{
            s, "point lies in every listed set"};
    };

    WitnessAlgebra<unsigned long> alg;
    alg.ball_oracle =
        [&](const Rational& s) -> std::optional<Ball<unsigned long>> {
        unsigned long n = escape(s);
        const ClosedSet& missing = family[n - 1];
        Rational radius = I.width() + Rational(1);
        if (!missing.empty()) {
            auto dist = missing.distance_to(s);
            radius = *dist / Rational(2);
        }
        return Ball<unsigned long>{radius, n};
    };
    alg.combine_overlap = [](const std::optional<unsigned long>& acc,
                              const unsigned long& piece, const Rational&,
                              const Rational&, const Rational&) {
        return fold_index(acc, piece);
    };

    RunResult<IndexCertificate> result;
    try {
        auto run = bisect_cover(I, alg, cfg);
        result.trace = std::move(run.trace);
        if (run.failure) {
            result.failure = detail::from_engine(*run.failure);
        } else {
            result.certificate = IndexCertificate{
                *run.witness, IndexCertificate::Role::cantor};
        }
    } catch (const detail::HypothesisSignal& sig) {
        RunFailure f;
        f.kind = "hypothesis-violation";
        f.at = sig.at;
        f.detail = sig.detail;
        result.failure = std::move(f);
    }
    return result;
}

bool verify_empty_index(const std::vector<ClosedSet>& family,
                        const Interval& I, const IndexCertificate& cert) {
    if (cert.n == 0 || family.size() < cert.n) return false;
    return closed_set_intersect(family[cert.n - 1], I).empty();
}

}  // namespace ivi
