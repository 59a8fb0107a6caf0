#include "ivi/theorems/common.hpp"

#include <algorithm>

namespace ivi {

unsigned long fold_index(const std::optional<unsigned long>& acc,
                         unsigned long piece) {
    return acc ? std::max(*acc, piece) : piece;
}

}  // namespace ivi

namespace ivi::detail {

std::optional<Rational> refine_radius(Rational radius,
                                      const std::function<bool(const Rational&)>& good) {
    const Rational half(1, 2);
    for (int i = 0; i <= 128; ++i) {
        if (good(radius)) return radius;
        radius *= half;
    }
    return std::nullopt;
}

std::vector<Rational> dyadic_grid(const Interval& I, unsigned long k) {
    std::vector<Rational> out;
    if (I.degenerate()) {
        out.push_back(I.lo);
        return out;
    }
    Rational step = I.width() * dyadic(k);
    mpz_class cells;
    mpz_ui_pow_ui(cells.get_mpz_t(), 2, k);
    out.reserve(mpz_get_ui(cells.get_mpz_t()) + 1);
    Rational x = I.lo;
    for (mpz_class j = 0; j < cells; ++j) {
        out.push_back(x);
        x += step;
    }
    out.push_back(I.hi);  // exact right endpoint, no accumulated drift issues
    return out;
}

std::optional<Enclosure> enclosure_over(const Expr& f, const ClosedSet& S,
                                        const std::optional<Rational>& n) {
    std::optional<Enclosure> acc;
    for (const Interval& part : S.components()) {
        auto e = eval_enclosure(f, part.as_enclosure(), n);
        if (!e) return std::nullopt;
        acc = acc ? hull(*acc, *e) : *e;
    }
    return acc;
}

}  // namespace ivi::detail
