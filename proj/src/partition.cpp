#include "ivi/partition.hpp"

#include <stdexcept>

namespace ivi {

void TaggedPartition::validate() const {
    if (cuts.empty()) throw std::logic_error("partition with no cuts");
    if (tags.size() + 1 != cuts.size())
        throw std::logic_error("partition needs exactly one tag per cell");
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (!(cuts[i - 1] < cuts[i]))
            throw std::logic_error("partition cuts must increase strictly");
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] < cuts[i] || cuts[i + 1] < tags[i])
            throw std::logic_error("partition tag outside its cell");
}

TaggedPartition concat(const TaggedPartition& a, const TaggedPartition& b) {
    if (a.hi() != b.lo())
        throw std::logic_error("concat of non-adjacent partitions: " +
                               a.hi().str() + " vs " + b.lo().str());
    TaggedPartition out = a;
    out.cuts.insert(out.cuts.end(), b.cuts.begin() + 1, b.cuts.end());
    out.tags.insert(out.tags.end(), b.tags.begin(), b.tags.end());
    return out;
}

bool is_delta_fine(const TaggedPartition& p, const Gauge& g) {
    p.validate();
    for (std::size_t i = 0; i < p.tags.size(); ++i) {
        const Rational r = g(p.tags[i]);  // throws on non-positive gauge
        if (p.cuts[i] < p.tags[i] - r || p.tags[i] + r < p.cuts[i + 1])
            return false;
    }
    return true;
}

}  // namespace ivi
