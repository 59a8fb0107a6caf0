// Command-line front end: run a theorem instance on parsed inputs, emit the
// certificate (or localized failure) as a JSON report, and re-verify saved
// reports.
//
// Exit codes: 0 success; 1 certified failure/refutation (oracle-failure,
// depth-limit, hypothesis-violation); 2 resource limit (step-limit,
// stall-no-recovery, scan-limit); 3 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ivi/engine.hpp"
#include "ivi/errors.hpp"
#include "ivi/expr.hpp"
#include "ivi/report.hpp"
#include "ivi/theorems/bound_sign.hpp"
#include "ivi/theorems/bw.hpp"
#include "ivi/theorems/cantor.hpp"
#include "ivi/theorems/cousin.hpp"
#include "ivi/theorems/dini.hpp"
#include "ivi/theorems/heine.hpp"
#include "ivi/theorems/heine_borel.hpp"
#include "ivi/theorems/maximum.hpp"
#include "ivi/theorems/monotone.hpp"

namespace {

using ivi::Json;

struct GlobalOpts {
    std::string json_path;
    std::string trace_path;
    unsigned long max_steps = 0;  // 0 = engine default
    unsigned long max_depth = 0;  // 0 = engine default
};

ivi::EngineConfig engine_config(const GlobalOpts& g) {
    ivi::EngineConfig cfg;
    if (g.max_steps != 0) cfg.max_steps = g.max_steps;
    if (g.max_depth != 0) cfg.max_bisect_depth = g.max_depth;
    return cfg;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

ivi::Rational rat_arg(const std::string& s) {
    return ivi::Rational::from_string(trim(s));
}

ivi::Interval interval_arg(const std::vector<std::string>& ab) {
    return ivi::Interval(rat_arg(ab.at(0)), rat_arg(ab.at(1)));
}

// SPEC: semicolon-separated closed intervals "a,b;c,d".
ivi::ClosedSet set_arg(const std::string& spec) {
    std::vector<ivi::Interval> comps;
    if (trim(spec).empty()) return ivi::ClosedSet::from_intervals(comps);
    for (const std::string& part : split(spec, ';')) {
        std::vector<std::string> ends = split(part, ',');
        if (ends.size() != 2) {
            throw ivi::InputError("set component '" + part +
                                  "' must be 'lo,hi'");
        }
        comps.emplace_back(rat_arg(ends[0]), rat_arg(ends[1]));
    }
    return ivi::ClosedSet::from_intervals(comps);
}

ivi::ClosedSet nonempty_set_arg(const std::string& spec) {
    ivi::ClosedSet C = set_arg(spec);
    if (C.empty()) throw ivi::InputError("--set must be non-empty");
    return C;
}

std::vector<ivi::Rational> points_arg(const std::string& list) {
    std::vector<ivi::Rational> pts;
    if (trim(list).empty()) return pts;
    for (const std::string& part : split(list, ',')) pts.push_back(rat_arg(part));
    return pts;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ivi::InputError("cannot read file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ivi::InputError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ivi::InputError("cannot write file: " + path);
    out << content;
}

int exit_for_failure(const std::string& kind) {
    if (kind == "step-limit" || kind == "stall-no-recovery" ||
        kind == "scan-limit") {
        return 2;
    }
    return 1;  // oracle-failure, depth-limit, hypothesis-violation
}

// Serialize, print, optionally persist; map the outcome to an exit code.
int emit(const std::string& instance, Json inputs, std::optional<Json> cert,
         const std::optional<ivi::RunFailure>& failure, const ivi::Trace& trace,
         const GlobalOpts& g) {
    std::optional<std::string> trace_file;
    if (!g.trace_path.empty()) {
        write_file(g.trace_path, ivi::trace_to_json_lines(trace));
        trace_file = g.trace_path;
    }
    Json outcome = cert ? ivi::certificate_outcome(std::move(*cert))
                        : ivi::failure_outcome(*failure);
    Json report =
        ivi::make_report(instance, std::move(inputs), std::move(outcome), trace_file);
    std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!g.json_path.empty()) write_file(g.json_path, text);
    return cert ? 0 : exit_for_failure(failure->kind);
}

template <class C, class F>
int emit_run(const std::string& instance, Json inputs,
             const ivi::RunResult<C>& run, const GlobalOpts& g, F cert_to_json) {
    std::optional<Json> cert;
    if (run.ok()) cert = cert_to_json(*run.certificate);
    return emit(instance, std::move(inputs), std::move(cert), run.failure,
                run.trace, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "interval induction toolkit: run witness-assembling searches for "
        "classical real-analysis facts over exact rational arithmetic, "
        "emitting independently checkable JSON certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--json", g.json_path,
                   "also write the JSON report to this path");
    app.add_option("--trace", g.trace_path,
                   "write the engine event trace (JSON lines) to this path");
    app.add_option("--max-steps", g.max_steps,
                   "cap on engine steps/visits (default 1000000)");
    app.add_option("--max-depth", g.max_depth,
                   "cap on bisection depth (default 64)");

    int rc = 0;

    // --- cousin ------------------------------------------------------------
    auto* cousin = app.add_subcommand(
        "cousin", "delta-fine tagged partition for a gauge");
    static std::string cousin_gauge, cousin_strategy = "creep";
    static std::vector<std::string> cousin_interval;
    cousin->add_option("--gauge", cousin_gauge, "gauge expression in x")
        ->required();
    cousin->add_option("--interval", cousin_interval, "endpoints a b")
        ->expected(2)
        ->required();
    cousin->add_option("--strategy", cousin_strategy, "creep | bisect")
        ->check(CLI::IsMember({"creep", "bisect"}));
    cousin->callback([&] {
        ivi::Expr ge = ivi::parse_expr(cousin_gauge);
        ivi::Interval I = interval_arg(cousin_interval);
        ivi::Gauge gauge([ge](const ivi::Rational& x) {
            return ivi::eval_rat(ge, ivi::EvalEnv{x, std::nullopt});
        });
        ivi::CousinStrategy strat = cousin_strategy == "creep"
                                        ? ivi::CousinStrategy::creep
                                        : ivi::CousinStrategy::bisect;
        Json inputs;
        inputs["gauge"] = ivi::print_expr(ge);
        inputs["interval"] = ivi::interval_json(I);
        inputs["strategy"] = cousin_strategy;
        auto run = ivi::cousin_partition(gauge, I, strat, engine_config(g));
        rc = emit_run("cousin", std::move(inputs), run, g,
                      [](const ivi::TaggedPartition& p) {
                          return ivi::partition_json(p);
                      });
    });

    // --- heine ---------------------------------------------------------------
    auto* heine = app.add_subcommand(
        "heine", "uniform continuity modulus on a closed set");
    static std::string heine_fn, heine_set, heine_eps;
    heine->add_option("--fn", heine_fn, "expression in x")->required();
    heine->add_option("--set", heine_set, "closed set \"a,b;c,d\"")->required();
    heine->add_option("--eps", heine_eps, "target oscillation (rational)")
        ->required();
    heine->callback([&] {
        ivi::Expr f = ivi::parse_expr(heine_fn);
        ivi::ClosedSet C = nonempty_set_arg(heine_set);
        ivi::Rational eps = rat_arg(heine_eps);
        Json inputs;
        inputs["fn"] = ivi::print_expr(f);
        inputs["set"] = ivi::closed_set_json(C);
        inputs["eps"] = eps.str();
        auto run = ivi::uniform_delta(f, C, C.hull(), eps, engine_config(g));
        rc = emit_run("heine", std::move(inputs), run, g,
                      [](const ivi::UniformModulus& c) {
                          return ivi::certificate_json(c);
                      });
    });

    // --- bound / sign --------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "certified bound |f| <= M");
    static std::string bound_fn;
    static std::vector<std::string> bound_interval;
    bound->add_option("--fn", bound_fn, "expression in x")->required();
    bound->add_option("--interval", bound_interval, "endpoints a b")
        ->expected(2)
        ->required();
    bound->callback([&] {
        ivi::Expr f = ivi::parse_expr(bound_fn);
        ivi::Interval I = interval_arg(bound_interval);
        Json inputs;
        inputs["fn"] = ivi::print_expr(f);
        inputs["interval"] = ivi::interval_json(I);
        auto run = ivi::bound_on(f, I, engine_config(g));
        rc = emit_run("bound", std::move(inputs), run, g,
                      [](const ivi::BoundCertificate& c) {
                          return ivi::certificate_json(c);
                      });
    });

    auto* sign = app.add_subcommand("sign", "certified constant sign of f");
    static std::string sign_fn;
    static std::vector<std::string> sign_interval;
    sign->add_option("--fn", sign_fn, "expression in x")->required();
    sign->add_option("--interval", sign_interval, "endpoints a b")
        ->expected(2)
        ->required();
    sign->callback([&] {
        ivi::Expr f = ivi::parse_expr(sign_fn);
        ivi::Interval I = interval_arg(sign_interval);
        Json inputs;
        inputs["fn"] = ivi::print_expr(f);
        inputs["interval"] = ivi::interval_json(I);
        auto run = ivi::constant_sign(f, I, engine_config(g));
        rc = emit_run("sign", std::move(inputs), run, g,
                      [](const ivi::SignCertificate& c) {
                          return ivi::certificate_json(c);
                      });
    });

    // --- monotone --------------------------------------------------------------
    auto* monotone = app.add_subcommand(
        "monotone", "strictly increasing chain (or eps-tilted inequality)");
    static std::string mono_fn, mono_tilt;
    static std::vector<std::string> mono_interval;
    static unsigned long mono_grid = 8;
    monotone->add_option("--fn", mono_fn, "expression in x")->required();
    monotone->add_option("--interval", mono_interval, "endpoints a b")
        ->expected(2)
        ->required();
    monotone->add_option("--grid", mono_grid,
                         "dyadic scan density exponent (default 8)");
    monotone->add_option(
        "--tilt", mono_tilt,
        "certify f(a) <= f(b) + eps*(b-a) via the tilted function");
    monotone->callback([&] {
        ivi::Expr f = ivi::parse_expr(mono_fn);
        ivi::Interval I = interval_arg(mono_interval);
        Json inputs;
        inputs["fn"] = ivi::print_expr(f);
        inputs["interval"] = ivi::interval_json(I);
        inputs["grid"] = mono_grid;
        if (!mono_tilt.empty()) {
            ivi::Rational eps = rat_arg(mono_tilt);
            inputs["tilt"] = eps.str();
            auto run =
                ivi::increase_via_tilt(f, I, eps, mono_grid, engine_config(g));
            rc = emit_run("monotone", std::move(inputs), run, g,
                          [](const ivi::TiltCertificate& c) {
                              return ivi::certificate_json(c);
                          });
        } else {
            auto run = ivi::strict_increase(f, I, I, mono_grid, engine_config(g));
            rc = emit_run("monotone", std::move(inputs), run, g,
                          [](const ivi::MonotoneChain& c) {
                              return ivi::certificate_json(c);
                          });
        }
    });

    // --- max ---------------------------------------------------------------
    auto* mx = app.add_subcommand(
        "max", "budget-certified maximum candidate on a closed set");
    static std::string max_fn, max_set;
    static unsigned long max_budget = 10;
    mx->add_option("--fn", max_fn, "expression in x")->required();
    mx->add_option("--set", max_set, "closed set \"a,b;c,d\"")->required();
    mx->add_option("--budget", max_budget,
                   "search grid density exponent (default 10)");
    mx->callback([&] {
        ivi::Expr f = ivi::parse_expr(max_fn);
        ivi::ClosedSet C = nonempty_set_arg(max_set);
        Json inputs;
        inputs["fn"] = ivi::print_expr(f);
        inputs["set"] = ivi::closed_set_json(C);
        inputs["budget"] = max_budget;
        auto run = ivi::usc_max(f, C, C.hull(), ivi::SearchBudget{max_budget},
                                engine_config(g));
        rc = emit_run("max", std::move(inputs), run, g,
                      [](const ivi::ArgmaxCandidate& c) {
                          return ivi::certificate_json(c);
                      });
    });

    // --- dini ----------------------------------------------------------------
    auto* dini = app.add_subcommand(
        "dini", "uniform smallness index for a decreasing family");
    static std::string dini_seq, dini_set, dini_eps;
    dini->add_option("--seq", dini_seq, "family expression in x and n")
        ->required();
    dini->add_option("--set", dini_set, "closed set \"a,b;c,d\"")->required();
    dini->add_option("--eps", dini_eps, "target bound (rational)")->required();
    dini->callback([&] {
        ivi::Expr f = ivi::parse_expr(dini_seq);
        ivi::ClosedSet C = nonempty_set_arg(dini_set);
        ivi::Rational eps = rat_arg(dini_eps);
        Json inputs;
        inputs["seq"] = ivi::print_expr(f);
        inputs["set"] = ivi::closed_set_json(C);
        inputs["eps"] = eps.str();
        auto run = ivi::dini_index(f, C, C.hull(), eps, 10000, engine_config(g));
        rc = emit_run("dini", std::move(inputs), run, g,
                      [](const ivi::IndexCertificate& c) {
                          return ivi::certificate_json(c);
                      });
    });

    // --- cover -------------------------------------------------------------
    auto* cover = app.add_subcommand(
        "cover", "finite subcover of a closed set from an open cover");
    static std::string cover_set, cover_file;
    cover->add_option("--set", cover_set, "closed set \"a,b;c,d\"")->required();
    cover->add_option("--cover", cover_file,
                      "JSON file {\"members\":[{\"lo\",\"hi\"},...]}")
        ->required();
    cover->callback([&] {
        ivi::ClosedSet C = nonempty_set_arg(cover_set);
        ivi::OpenCover O = ivi::cover_from(load_json_file(cover_file));
        Json inputs;
        inputs["set"] = ivi::closed_set_json(C);
        inputs["cover"] = ivi::cover_json(O);
        auto run = ivi::finite_subcover(O, C, C.hull(), engine_config(g));
        rc = emit_run("cover", std::move(inputs), run, g,
                      [](const ivi::SubcoverCertificate& c) {
                          return ivi::certificate_json(c);
                      });
    });

    // --- bw ----------------------------------------------------------------
    auto* bw = app.add_subcommand(
        "bw", "certified enumeration of a finite point set within an interval");
    static std::string bw_points;
    static std::vector<std::string> bw_interval;
    bw->add_option("--points", bw_points, "comma-separated rationals")
        ->required();
    bw->add_option("--interval", bw_interval, "endpoints a b")
        ->expected(2)
        ->required();
    bw->callback([&] {
        ivi::PointSet F = ivi::PointSet::from_list(points_arg(bw_points));
        ivi::Interval I = interval_arg(bw_interval);
        Json inputs;
        inputs["points"] = ivi::rational_list_json(F.points());
        inputs["interval"] = ivi::interval_json(I);
        auto run = ivi::enumerate_isolated(F, I, engine_config(g));
        rc = emit_run("bw", std::move(inputs), run, g,
                      [](const std::vector<ivi::Rational>& pts) {
                          return ivi::certificate_json(pts);
                      });
    });

    // --- cantor --------------------------------------------------------------
    auto* cantor = app.add_subcommand(
        "cantor", "index at which a decreasing family leaves the interval");
    static std::string cantor_file;
    cantor->add_option(
            "--family", cantor_file,
            "JSON file {\"interval\":{...},\"sets\":[[{\"lo\",\"hi\"},...],...]}")
        ->required();
    cantor->callback([&] {
        Json fam = load_json_file(cantor_file);
        ivi::Interval I = ivi::interval_from(fam.at("interval"));
        if (!fam.contains("sets") || !fam["sets"].is_array()) {
            throw ivi::InputError("family file needs a \"sets\" array");
        }
        std::vector<ivi::ClosedSet> sets;
        Json sets_echo = Json::array();
        for (const Json& e : fam["sets"]) {
            sets.push_back(ivi::closed_set_from(e));
            sets_echo.push_back(ivi::closed_set_json(sets.back()));
        }
        Json inputs;
        Json fam_echo;
        fam_echo["interval"] = ivi::interval_json(I);
        fam_echo["sets"] = std::move(sets_echo);
        inputs["family"] = std::move(fam_echo);
        auto run = ivi::cantor_empty_index(sets, I, engine_config(g));
        rc = emit_run("cantor", std::move(inputs), run, g,
                      [](const ivi::IndexCertificate& c) {
                          return ivi::certificate_json(c);
                      });
    });

    // --- verify --------------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "re-check the certificate inside a saved report");
    static std::string verify_file;
    verify->add_option("--report", verify_file, "report JSON file")->required();
    verify->callback([&] {
        Json report = load_json_file(verify_file);
        bool ok = ivi::verify_report(report);
        Json out;
        out["verified"] = ok;
        std::cout << out.dump(2) << "\n";
        rc = ok ? 0 : 1;
    });

    auto started = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    } catch (const ivi::ParseError& e) {
        std::cerr << "error: " << e.what() << " (offset " << e.offset << ")\n";
        return 3;
    } catch (const ivi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "wall-time: " << elapsed.count() << " ms\n";
    return rc;
}
