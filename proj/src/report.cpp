#include "ivi/report.hpp"

#include "ivi/errors.hpp"
#include "ivi/expr.hpp"
#include "ivi/theorems/bound_sign.hpp"
#include "ivi/theorems/bw.hpp"
#include "ivi/theorems/cantor.hpp"
#include "ivi/theorems/cousin.hpp"
#include "ivi/theorems/dini.hpp"
#include "ivi/theorems/heine.hpp"
#include "ivi/theorems/heine_borel.hpp"
#include "ivi/theorems/maximum.hpp"
#include "ivi/theorems/monotone.hpp"

namespace ivi {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw InputError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

std::string string_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) {
        throw InputError(std::string("field \"") + name + "\" must be a string");
    }
    return v.get<std::string>();
}

unsigned long uint_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_unsigned()) {
        throw InputError(std::string("field \"") + name +
                         "\" must be a non-negative integer");
    }
    return v.get<unsigned long>();
}

}  // namespace

Json rational_json(const Rational& q) { return q.str(); }

Json interval_json(const Interval& I) {
    Json j;
    j["lo"] = I.lo.str();
    j["hi"] = I.hi.str();
    return j;
}

Json closed_set_json(const ClosedSet& C) {
    Json j = Json::array();
    for (const Interval& comp : C.components()) j.push_back(interval_json(comp));
    return j;
}

Json rational_list_json(const std::vector<Rational>& xs) {
    Json j = Json::array();
    for (const Rational& x : xs) j.push_back(x.str());
    return j;
}

Json partition_json(const TaggedPartition& p) {
    Json j;
    j["cuts"] = rational_list_json(p.cuts);
    j["tags"] = rational_list_json(p.tags);
    return j;
}

Json cover_json(const OpenCover& O) {
    Json members = Json::array();
    for (const OpenIntervalSpec& m : O.members) {
        Json e;
        e["lo"] = m.lo.str();
        e["hi"] = m.hi.str();
        members.push_back(e);
    }
    Json j;
    j["members"] = members;
    return j;
}

Rational rational_from(const Json& j) {
    if (!j.is_string()) throw InputError("expected a \"p/q\" string");
    return Rational::from_string(j.get<std::string>());
}

Interval interval_from(const Json& j) {
    return Interval(rational_from(field(j, "lo")), rational_from(field(j, "hi")));
}

ClosedSet closed_set_from(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of intervals");
    std::vector<Interval> comps;
    for (const Json& e : j) comps.push_back(interval_from(e));
    return ClosedSet::from_intervals(comps);
}

std::vector<Rational> rational_list_from(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    std::vector<Rational> xs;
    for (const Json& e : j) xs.push_back(rational_from(e));
    return xs;
}

TaggedPartition partition_from(const Json& j) {
    TaggedPartition p;
    p.cuts = rational_list_from(field(j, "cuts"));
    p.tags = rational_list_from(field(j, "tags"));
    return p;
}

OpenCover cover_from(const Json& j) {
    const Json& members = field(j, "members");
    if (!members.is_array()) throw InputError("\"members\" must be an array");
    OpenCover O;
    for (const Json& e : members) {
        O.members.push_back(OpenIntervalSpec{rational_from(field(e, "lo")),
                                             rational_from(field(e, "hi"))});
    }
    return O;
}

Json certificate_json(const BoundCertificate& c) {
    Json j;
    j["M"] = c.M.str();
    j["interval"] = interval_json(c.interval);
    return j;
}

Json certificate_json(const SignCertificate& c) {
    Json j;
    j["sign"] = c.sign == SignCertificate::Sign::positive ? "positive" : "negative";
    j["interval"] = interval_json(c.interval);
    return j;
}

Json certificate_json(const ArgmaxCandidate& c) {
    Json j;
    j["point"] = c.point.str();
    j["value"] = c.value.str();
    j["budget"] = c.grid_exponent;
    return j;
}

Json certificate_json(const MonotoneChain& c) {
    Json j;
    j["points"] = rational_list_json(c.points);
    j["values"] = rational_list_json(c.values);
    return j;
}

Json certificate_json(const TiltCertificate& c) {
    Json j;
    j["eps"] = c.eps.str();
    j["interval"] = interval_json(c.interval);
    j["lhs"] = c.lhs.str();
    j["rhs"] = c.rhs.str();
    j["chain"] = certificate_json(c.chain);
    return j;
}

Json certificate_json(const UniformModulus& c) {
    Json j;
    j["epsilon"] = c.epsilon.str();
    j["delta"] = c.delta.str();
    j["set"] = closed_set_json(c.set);
    return j;
}

Json certificate_json(const IndexCertificate& c) {
    Json j;
    j["n"] = c.n;
    j["role"] = c.role == IndexCertificate::Role::dini ? "dini" : "cantor";
    return j;
}

Json certificate_json(const SubcoverCertificate& c) {
    Json j;
    j["member_indices"] = c.member_indices;
    return j;
}

Json certificate_json(const DiniDerivateBound& c) {
    Json j;
    j["kind"] = c.kind == DiniDerivateBound::Kind::lower_left ? "lower-left"
                                                              : "upper-right";
    j["at"] = c.at.str();
    j["bound"] = c.bound.str();
    j["witness_r_or_t"] = c.witness_r_or_t.str();
    j["grid_only"] = c.grid_only;
    return j;
}

Json certificate_json(const std::vector<Rational>& points) {
    Json j;
    j["points"] = rational_list_json(points);
    return j;
}

Json failure_json(const RunFailure& f) {
    Json j;
    j["kind"] = f.kind;
    if (f.at) j["at"] = f.at->str();
    if (f.leaf) j["leaf"] = interval_json(*f.leaf);
    if (f.sup_estimate) j["sup_estimate"] = f.sup_estimate->str();
    if (f.residual) j["residual"] = f.residual->str();
    if (!f.detail.empty()) j["detail"] = f.detail;
    return j;
}

Json make_report(const std::string& instance, Json inputs, Json outcome,
                 const std::optional<std::string>& trace_file) {
    Json j;
    j["instance"] = instance;
    j["inputs"] = std::move(inputs);
    j["outcome"] = std::move(outcome);
    j["trace_file"] = trace_file ? Json(*trace_file) : Json(nullptr);
    return j;
}

Json certificate_outcome(Json certificate) {
    Json j;
    j["status"] = "certificate";
    j["certificate"] = std::move(certificate);
    return j;
}

Json failure_outcome(const RunFailure& f) {
    Json j;
    j["status"] = "failure";
    j["failure"] = failure_json(f);
    return j;
}

bool verify_report(const Json& report) {
    const std::string instance = string_field(report, "instance");
    const Json& inputs = field(report, "inputs");
    const Json& outcome = field(report, "outcome");
    if (string_field(outcome, "status") != "certificate") return false;
    const Json& cert = field(outcome, "certificate");

    if (instance == "cousin") {
        Expr g_expr = parse_expr(string_field(inputs, "gauge"));
        Gauge g([g_expr](const Rational& x) {
            return eval_rat(g_expr, EvalEnv{x, std::nullopt});
        });
        return verify_partition(partition_from(cert),
                                g, interval_from(field(inputs, "interval")));
    }
    if (instance == "heine") {
        Expr f = parse_expr(string_field(inputs, "fn"));
        UniformModulus c{rational_from(field(cert, "epsilon")),
                         rational_from(field(cert, "delta")),
                         closed_set_from(field(cert, "set"))};
        return verify_modulus(f, c);
    }
    if (instance == "bound") {
        Expr f = parse_expr(string_field(inputs, "fn"));
        BoundCertificate c{rational_from(field(cert, "M")),
                           interval_from(field(cert, "interval"))};
        return verify_bound(f, c);
    }
    if (instance == "sign") {
        Expr f = parse_expr(string_field(inputs, "fn"));
        std::string s = string_field(cert, "sign");
        if (s != "positive" && s != "negative") {
            throw InputError("sign must be \"positive\" or \"negative\"");
        }
        SignCertificate c{s == "positive" ? SignCertificate::Sign::positive
                                          : SignCertificate::Sign::negative,
                          interval_from(field(cert, "interval"))};
        return verify_sign(f, c);
    }
    if (instance == "monotone") {
        Expr f = parse_expr(string_field(inputs, "fn"));
        if (cert.contains("eps")) {
            TiltCertificate c{rational_from(field(cert, "eps")),
                              interval_from(field(cert, "interval")),
                              rational_from(field(cert, "lhs")),
                              rational_from(field(cert, "rhs")),
                              MonotoneChain{
                                  rational_list_from(
                                      field(field(cert, "chain"), "points")),
                                  rational_list_from(
                                      field(field(cert, "chain"), "values"))}};
            return verify_tilt(f, c);
        }
        MonotoneChain c{rational_list_from(field(cert, "points")),
                        rational_list_from(field(cert, "values"))};
        return verify_chain(f, c, interval_from(field(inputs, "interval")));
    }
    if (instance == "max") {
        Expr f = parse_expr(string_field(inputs, "fn"));
        ClosedSet C = closed_set_from(field(inputs, "set"));
        if (C.empty()) throw InputError("set must be non-empty");
        ArgmaxCandidate c{rational_from(field(cert, "point")),
                          rational_from(field(cert, "value")),
                          uint_field(cert, "budget")};
        return verify_argmax(f, C, C.hull(), c);
    }
    if (instance == "dini") {
        Expr f = parse_expr(string_field(inputs, "seq"));
        ClosedSet C = closed_set_from(field(inputs, "set"));
        if (C.empty()) throw InputError("set must be non-empty");
        IndexCertificate c{uint_field(cert, "n"), IndexCertificate::Role::dini};
        return verify_index(f, C, C.hull(),
                            rational_from(field(inputs, "eps")), c);
    }
    if (instance == "cover") {
        OpenCover O = cover_from(field(inputs, "cover"));
        ClosedSet C = closed_set_from(field(inputs, "set"));
        SubcoverCertificate c;
        for (const Json& e : field(cert, "member_indices")) {
            if (!e.is_number_unsigned()) {
                throw InputError("member_indices must be non-negative integers");
            }
            c.member_indices.push_back(e.get<std::size_t>());
        }
        return verify_subcover(O, c, C);
    }
    if (instance == "bw") {
        PointSet F = PointSet::from_list(
            rational_list_from(field(inputs, "points")));
        return verify_points(F, interval_from(field(inputs, "interval")),
                             rational_list_from(field(cert, "points")));
    }
    if (instance == "cantor") {
        const Json& fam = field(inputs, "family");
        std::vector<ClosedSet> sets;
        for (const Json& e : field(fam, "sets")) {
            sets.push_back(closed_set_from(e));
        }
        if (sets.empty()) throw InputError("family must list at least one set");
        IndexCertificate c{uint_field(cert, "n"),
                           IndexCertificate::Role::cantor};
        return verify_empty_index(sets, interval_from(field(fam, "interval")), c);
    }
    throw InputError("unknown instance \"" + instance + "\"");
}

}  // namespace ivi
