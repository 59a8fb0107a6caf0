#include "ivi/theorems/monotone.hpp"

#include <algorithm>

namespace ivi {

namespace {

MonotoneChain chain_point(const Rational& x, const Rational& v) {
    return MonotoneChain{{x}, {v}};
}

MonotoneChain chain_pair(const Rational& x0, const Rational& v0, const Rational& x1,
                         const Rational& v1) {
    return MonotoneChain{{x0, x1}, {v0, v1}};
}

MonotoneChain splice(const MonotoneChain& left, const MonotoneChain& right) {
    if (left.points.empty() || right.points.empty() ||
        left.points.back() != right.points.front() ||
        left.values.back() != right.values.front())
        throw std::logic_error("chain pieces do not meet at a shared point");
    MonotoneChain out = left;
    out.points.insert(out.points.end(), right.points.begin() + 1, right.points.end());
    out.values.insert(out.values.end(), right.values.begin() + 1, right.values.end());
    return out;
}

}  // namespace

RunResult<MonotoneChain> strict_increase(const Expr& f, const Interval& c_d,
                                         const Interval& a_b, unsigned long search_grid,
                                         const EngineConfig& cfg) {
    if (!c_d.contains(a_b))
        throw InputError("run interval " + a_b.str() + " must lie inside the domain " +
                         c_d.str());
    auto value_at = [&f](const Rational& x) { return eval_rat(f, EvalEnv{x, {}}); };
    std::vector<Rational> grid = detail::dyadic_grid(a_b, search_grid);

    WitnessAlgebra<MonotoneChain> alg;
    alg.point_witness = [&](const Rational& x) { return chain_point(x, value_at(x)); };
    alg.combine_adjacent = splice;
    alg.right_oracle =
        [&](const Rational& s) -> std::optional<RightStep<MonotoneChain>> {
        Rational fs = value_at(s);
        auto it = std::upper_bound(grid.begin(), grid.end(), s);
        for (; it != grid.end(); ++it) {
            Rational ft = value_at(*it);
            if (fs < ft)
                return RightStep<MonotoneChain>{*it, chain_pair(s, fs, *it, ft)};
        }
        return std::nullopt;  // nothing right of s improves at this resolution
    };
    alg.left_oracle =
        [&](const Rational& sigma) -> std::optional<LeftRecovery<MonotoneChain>> {
        Rational fsigma = value_at(sigma);
        auto below = std::find_if(grid.begin(), grid.end(), [&](const Rational& x) {
            return x < sigma && value_at(x) < fsigma;
        });
        if (below == grid.end()) return std::nullopt;
        LeftRecovery<MonotoneChain> rec;
        rec.window_lo = *below;
        rec.piece_for = [&f, sigma, fsigma](const Rational& x)
            -> std::optional<MonotoneChain> {
            Rational fx = eval_rat(f, EvalEnv{x, {}});
            if (!(fx < fsigma)) return std::nullopt;  // exact check; decline
            return chain_pair(x, fx, sigma, fsigma);
        };
        return rec;
    };

    auto outcome = creep(a_b, alg, cfg);
    RunResult<MonotoneChain> result;
    result.trace = std::move(outcome.trace);
    if (!outcome.ok()) {
        result.failure = detail::from_engine(*outcome.failure);
        return result;
    }
    result.certificate = std::move(*outcome.witness);
    return result;
}

bool verify_chain(const Expr& f, const MonotoneChain& chain, const Interval& a_b) {
    if (chain.points.empty() || chain.points.size() != chain.values.size()) return false;
    if (chain.points.front() != a_b.lo || chain.points.back() != a_b.hi) return false;
    try {
        for (std::size_t i = 0; i < chain.points.size(); ++i) {
            if (eval_rat(f, EvalEnv{chain.points[i], {}}) != chain.values[i])
                return false;
            if (i > 0 && !(chain.points[i - 1] < chain.points[i])) return false;
            if (i > 0 && !a_b.degenerate() && !(chain.values[i - 1] < chain.values[i]))
                return false;
        }
    } catch (const UndefinedValueError&) {
        return false;
    }
    return true;
}

DiniDerivateBound dini_derivate_bound(const Expr& f, const Rational& s,
                                      DiniDerivateBound::Kind kind,
                                      const Rational& r_or_t, unsigned long grid) {
    using Kind = DiniDerivateBound::Kind;
    if (r_or_t == s)
        throw EmptyWindowError("difference quotients need a window, got r_or_t == s == " +
                               s.str());
    if ((kind == Kind::lower_left) != (r_or_t < s))
        throw InputError(std::string("window endpoint ") + r_or_t.str() +
                         " lies on the wrong side of " + s.str());

    auto value_at = [&f](const Rational& x) { return eval_rat(f, EvalEnv{x, {}}); };
    Rational fs = value_at(s);

    if (kind == Kind::lower_left) {
        std::optional<Rational> bound;
        for (const Rational& x : detail::dyadic_grid(Interval(r_or_t, s), grid)) {
            if (x == s) continue;  // window is [r, s[
            Rational q = (fs - value_at(x)) / (s - x);
            if (!bound || q < *bound) bound = q;
        }
        return DiniDerivateBound{kind, s, *bound, r_or_t, true};
    }
    std::optional<Rational> bound;
    Rational witness = r_or_t;
    for (const Rational& x : detail::dyadic_grid(Interval(s, r_or_t), grid)) {
        if (x == s) continue;  // window is ]s, t]
        Rational q = (value_at(x) - fs) / (x - s);
        if (!bound || q > *bound) {
            bound = q;
            witness = x;
        }
    }
    return DiniDerivateBound{kind, s, *bound, witness, true};
}

bool verify_derivate(const Expr& f, const DiniDerivateBound& cert, unsigned long grid) {
    using Kind = DiniDerivateBound::Kind;
    auto value_at = [&f](const Rational& x) { return eval_rat(f, EvalEnv{x, {}}); };
    try {
        Rational fs = value_at(cert.at);
        if (cert.kind == Kind::lower_left) {
            for (const Rational& x :
                 detail::dyadic_grid(Interval(cert.witness_r_or_t, cert.at), grid)) {
                if (x == cert.at) continue;
                if ((fs - value_at(x)) / (cert.at - x) < cert.bound) return false;
            }
            return true;
        }
        // upper-right: the stored witness point must attain the bound.
        if (!(cert.at < cert.witness_r_or_t)) return false;
        return (value_at(cert.witness_r_or_t) - fs) / (cert.witness_r_or_t - cert.at) ==
               cert.bound;
    } catch (const UndefinedValueError&) {
        return false;
    }
}

RunResult<TiltCertificate> increase_via_tilt(const Expr& f, const Interval& a_b,
                                             const Rational& eps,
                                             unsigned long search_grid,
                                             const EngineConfig& cfg) {
    if (!(eps.sign() > 0))
        throw InputError("tilt requires a positive eps, got " + eps.str());
    Expr tilted = Expr::add(f, Expr::mul(Expr::lit(eps), Expr::var_x()));

    auto inner = strict_increase(tilted, a_b, a_b, search_grid, cfg);
    RunResult<TiltCertificate> result;
    result.trace = std::move(inner.trace);
    if (!inner.ok()) {
        result.failure = std::move(inner.failure);
        return result;
    }
    Rational fa = eval_rat(f, EvalEnv{a_b.lo, {}});
    Rational fb = eval_rat(f, EvalEnv{a_b.hi, {}});
    result.certificate = TiltCertificate{eps, a_b, fa, fb + eps * a_b.width(),
                                         std::move(*inner.certificate)};
    return result;
}

bool verify_tilt(const Expr& f, const TiltCertificate& cert) {
    if (!(cert.eps.sign() > 0)) return false;
    Expr tilted = Expr::add(f, Expr::mul(Expr::lit(cert.eps), Expr::var_x()));
    if (!verify_chain(tilted, cert.chain, cert.interval)) return false;
    try {
        Rational fa = eval_rat(f, EvalEnv{cert.interval.lo, {}});
        Rational fb = eval_rat(f, EvalEnv{cert.interval.hi, {}});
        return cert.lhs == fa && cert.rhs == fb + cert.eps * cert.interval.width() &&
               cert.lhs <= cert.rhs;
    } catch (const UndefinedValueError&) {
        return false;
    }
}

}  // namespace ivi
