// cayley-verify: command-line front end for the exact Cayley-surface library.
//
// Subcommands: eval | curve | contact | act | identify | suite. All checks
// are exact rational identities; reports are deterministic for a fixed seed.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/contact.hpp"
#include "cayley/cubics.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/jets.hpp"
#include "cayley/params.hpp"
#include "cayley/sampling.hpp"
#include "cayley/suites.hpp"
#include "cayley/surface.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    bool json = false;
    bool explain = false;
    std::uint64_t seed = 1;
    int samples = 100;
    int bound = 6;
    int max_order = 5;
};

struct CurveParamValue {
    bool infinite = false;
    cayley::Rational value;
};

CurveParamValue parse_u(const std::string& text) {
    if (text == "inf" || text == "infinity") return {true, cayley::Rational(0)};
    return {false, cayley::parse_rational(text)};
}

std::string u_label(const CurveParamValue& u) {
    return u.infinite ? "inf" : cayley::to_string(u.value);
}

ordered_json rational_strings(const cayley::Vec4& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : cayley::canonical(v)) arr.push_back(cayley::to_string(x));
    return arr;
}

ordered_json jet_json(const cayley::Jet& jet) {
    ordered_json out;
    out["kind"] = jet.kind == cayley::BaseKind::Point ? "point" : "plane";
    out["chart"] = jet.chart;
    out["basepoint"] = rational_strings(jet.basepoint);
    ordered_json comps = ordered_json::array();
    for (const cayley::Series& c : jet.comp) {
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= c.order(); ++k) coeffs.push_back(cayley::to_string(c[k]));
        comps.push_back(std::move(coeffs));
    }
    out["components"] = std::move(comps);
    return out;
}

ordered_json report_json(const cayley::SuiteReport& r) {
    // elapsed time is intentionally omitted: identical invocations must give
    // byte-identical JSON
    ordered_json out;
    out["suite"] = r.suite;
    out["seed"] = std::to_string(r.seed);
    out["samples"] = r.samples;
    out["passes"] = r.passes;
    if (r.counterexample) {
        out["counterexample"] = {{"index", r.counterexample->index},
                                 {"input", r.counterexample->input},
                                 {"expected", r.counterexample->expected},
                                 {"actual", r.counterexample->actual}};
    } else {
        out["counterexample"] = nullptr;
    }
    out["notes"] = r.notes;
    out["pass"] = r.passed();
    return out;
}

void print_report_text(const cayley::SuiteReport& r) {
    std::cout << "suite:   " << r.suite << "\n"
              << "seed:    " << r.seed << "\n"
              << "samples: " << r.samples << "\n"
              << "passes:  " << r.passes << "\n"
              << "result:  " << (r.passed() ? "PASS" : "FAIL") << "\n"
              << "elapsed: " << r.elapsed.count() << " ms\n";
    if (r.counterexample) {
        std::cout << "counterexample #" << r.counterexample->index << ":\n"
                  << "  input:    " << r.counterexample->input << "\n"
                  << "  expected: " << r.counterexample->expected << "\n"
                  << "  actual:   " << r.counterexample->actual << "\n";
    }
    for (const std::string& note : r.notes) std::cout << "note: " << note << "\n";
}

int cmd_eval(const GlobalOpts& opts, const std::string& point_text) {
    cayley::HPoint p = cayley::parse_hpoint(point_text);
    cayley::Rational value = cayley::cayley_eval(p);
    cayley::SurfaceOrbit orbit = cayley::orbit_of(p);
    if (opts.json) {
        ordered_json out;
        out["command"] = "eval";
        out["point"] = cayley::to_string(p);
        out["value"] = cayley::to_string(value);
        out["orbit"] = std::string(cayley::to_string(orbit));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "point: " << cayley::to_string(p) << "\n"
                  << "value: " << cayley::to_string(value) << "\n"
                  << "orbit: " << cayley::to_string(orbit) << "\n";
    }
    return 0;
}

int cmd_curve(const GlobalOpts& opts, const std::string& params_text,
              std::vector<std::string> u_texts) {
    cayley::CubicParams p = cayley::parse_cubic_params(params_text);
    if (u_texts.empty()) u_texts = {"0", "1", "-1", "2", "inf"};
    ordered_json points = ordered_json::array();
    bool all_ok = true;
    for (const std::string& ut : u_texts) {
        CurveParamValue u = parse_u(ut);
        cayley::HPoint x = u.infinite ? cayley::curve_point_at_infinity(p)
                                      : cayley::curve_point(p, u.value);
        cayley::HPlane osc = u.infinite ? cayley::osculating_plane_at_infinity(p)
                                        : cayley::osculating_plane(p, u.value);
        bool on_surface = cayley::cayley_eval(x) == 0;
        bool on_cylinder = cayley::cylinder_eval(p, x) == 0;
        bool osc_incident = cayley::incident(x, osc);
        all_ok = all_ok && on_surface && on_cylinder && osc_incident;
        if (opts.json) {
            points.push_back({{"u", u_label(u)},
                              {"point", cayley::to_string(x)},
                              {"osculating_plane", cayley::to_string(osc)},
                              {"on_surface", on_surface},
                              {"on_cylinder", on_cylinder}});
        } else {
            std::cout << "u=" << u_label(u) << ": point " << cayley::to_string(x)
                      << "  osculating plane " << cayley::to_string(osc)
                      << (on_surface && on_cylinder ? "" : "  [CHECK FAILED]") << "\n";
        }
    }
    if (opts.json) {
        ordered_json out;
        out["command"] = "curve";
        out["params"] = cayley::to_string(p);
        out["points"] = std::move(points);
        out["pass"] = all_ok;
        std::cout << out.dump(2) << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_contact(const GlobalOpts& opts, const std::string& p_text, const std::string& q_text,
                bool dual) {
    cayley::CubicParams p = cayley::parse_cubic_params(p_text);
    cayley::CubicParams q = cayley::parse_cubic_params(q_text);
    int cap = opts.max_order;
    int order = std::max(cayley::default_jet_order, cap + 2);
    cayley::Jet j1 = dual ? cayley::dual_jet_at_omega(p, order) : cayley::curve_jet_at_U(p, order);
    cayley::Jet j2 = dual ? cayley::dual_jet_at_omega(q, order) : cayley::curve_jet_at_U(q, order);
    cayley::MatchResult match = cayley::match_jets(j1, j2, cap);
    cayley::ContactOrder predicted = cayley::clamp_order(
        dual ? cayley::predicted_dual_contact_order(p, q) : cayley::predicted_contact_order(p, q),
        cap);
    bool agree = match.order == predicted;

    if (opts.json) {
        ordered_json out;
        out["command"] = "contact";
        out["P"] = cayley::to_string(p);
        out["Pbar"] = cayley::to_string(q);
        out["dual"] = dual;
        out["computed"] = cayley::to_string(match.order);
        out["predicted"] = cayley::to_string(predicted);
        out["agree"] = agree;
        if (opts.explain) {
            ordered_json explain;
            explain["jet1"] = jet_json(j1);
            explain["jet2"] = jet_json(j2);
            if (match.fail_order) {
                explain["first_failing_order"] = *match.fail_order;
                explain["failing_component"] = *match.fail_component;
            } else {
                explain["first_failing_order"] = nullptr;
            }
            out["explain"] = std::move(explain);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (dual ? "dual contact order at omega" : "contact order at U") << "\n"
                  << "computed:  " << cayley::to_string(match.order) << "\n"
                  << "predicted: " << cayley::to_string(predicted) << "\n"
                  << "agree:     " << (agree ? "yes" : "NO") << "\n";
        if (opts.explain) {
            std::cout << "jet P:    " << jet_json(j1).dump() << "\n"
                      << "jet Pbar: " << jet_json(j2).dump() << "\n";
            if (match.fail_order)
                std::cout << "matching failed at order " << *match.fail_order << " in component "
                          << *match.fail_component << "\n";
            else
                std::cout << "matching succeeded through the cap\n";
        }
    }
    return agree ? 0 : 1;
}

int cmd_act(const GlobalOpts& opts, const std::string& g_text, const std::string& p_text,
            std::vector<std::string> u_texts) {
    cayley::GroupElem g = cayley::parse_group_elem(g_text);
    cayley::CubicParams p = cayley::parse_cubic_params(p_text);
    cayley::CubicParams moved = cayley::act_on_params(g, p);
    cayley::Collineation m = cayley::group_matrix(g);
    if (u_texts.empty()) u_texts = {"0", "1", "-1", "2"};
    bool all_ok = true;
    ordered_json checks = ordered_json::array();
    for (const std::string& ut : u_texts) {
        CurveParamValue u = parse_u(ut);
        cayley::HPoint image = cayley::apply_point(
            m, u.infinite ? cayley::curve_point_at_infinity(p) : cayley::curve_point(p, u.value));
        bool on_surface = cayley::cayley_eval(image) == 0;
        bool on_cylinder = cayley::cylinder_eval(moved, image) == 0;
        all_ok = all_ok && on_surface && on_cylinder;
        if (opts.json) {
            checks.push_back({{"u", u_label(u)},
                              {"image", cayley::to_string(image)},
                              {"on_surface", on_surface},
                              {"on_transported_cylinder", on_cylinder}});
        } else {
            std::cout << "u=" << u_label(u) << ": image " << cayley::to_string(image)
                      << (on_surface && on_cylinder ? "  ok" : "  [CHECK FAILED]") << "\n";
        }
    }
    if (opts.json) {
        ordered_json out;
        out["command"] = "act";
        out["g"] = cayley::to_string(g);
        out["P"] = cayley::to_string(p);
        out["transported"] = cayley::to_string(moved);
        out["checks"] = std::move(checks);
        out["pass"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "transported parameters: " << cayley::to_string(moved) << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_identify(const GlobalOpts& opts, const std::string& path) {
    std::ifstream in(path);
    cayley::detail::require(in.good(), cayley::errc::parse, "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw cayley::error(cayley::errc::parse, std::string("invalid JSON: ") + e.what());
    }
    cayley::detail::require(doc.is_array(), cayley::errc::parse,
                            "point list must be a JSON array");
    std::vector<cayley::HPoint> points;
    for (const auto& item : doc) {
        cayley::detail::require(item.is_array() && item.size() == 4, cayley::errc::parse,
                                "each point must be a 4-array of rational strings");
        cayley::Vec4 v;
        for (std::size_t i = 0; i < 4; ++i) {
            cayley::detail::require(item[i].is_string(), cayley::errc::parse,
                                    "point coordinates must be rational strings");
            v[i] = cayley::parse_rational(item[i].get<std::string>());
        }
        points.emplace_back(std::move(v));
    }
    cayley::CubicParams recovered = cayley::identify_params(points);
    if (opts.json) {
        ordered_json out;
        out["command"] = "identify";
        out["file"] = path;
        out["points"] = static_cast<int>(points.size());
        out["params"] = cayley::to_string(recovered);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "recovered parameters: " << cayley::to_string(recovered) << "\n";
    }
    return 0;
}

int cmd_suite(const GlobalOpts& opts, const std::string& name) {
    cayley::SampleSpec spec{opts.seed, opts.samples, opts.bound};
    std::vector<cayley::SuiteReport> reports;
    if (name == "all")
        reports = cayley::run_all_suites(spec);
    else
        reports.push_back(cayley::run_suite(name, spec));

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.passed();

    if (opts.json) {
        ordered_json out;
        out["command"] = "suite";
        out["suite"] = name;
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out["reports"] = std::move(arr);
        out["pass"] = all_pass;
        std::cout << out.dump(2) << "\n";
    } else {
        bool first = true;
        for (const auto& r : reports) {
            if (!first) std::cout << "\n";
            first = false;
            print_report_text(r);
        }
        if (reports.size() > 1)
            std::cout << "\noverall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for the Cayley surface, its collineation group,\n"
                 "and higher-order contact of the cubic parabolas it carries."};
    app.require_subcommand(1);
    // global flags may appear before or after the subcommand
    app.fallthrough();

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit machine-readable JSON (deterministic)");
    app.add_flag("--explain", opts.explain, "dump jets and the first failing matching order");
    app.add_option("--seed", opts.seed, "seed for random sampling")->capture_default_str();
    app.add_option("--samples", opts.samples, "random sample count per suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--bound", opts.bound, "height bound for sampled rationals")
        ->check(CLI::Range(2, 1'000'000))
        ->capture_default_str();
    app.add_option("--max-order", opts.max_order, "jet matching cap")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();

    std::string point_text, params_text, params2_text, group_text, file_path, suite_name;
    std::vector<std::string> u_texts;
    bool dual = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate the surface form and orbit of a point");
    eval->add_option("point", point_text, "homogeneous point 'x0,x1,x2,x3'")->required();

    CLI::App* curve = app.add_subcommand("curve", "sample a family curve and its osculating planes");
    curve->add_option("params", params_text, "parameters 'alpha,beta,gamma'")->required();
    curve->add_option("--u", u_texts, "parameter values (rational or 'inf')");

    CLI::App* contact = app.add_subcommand("contact", "compare computed and predicted contact order");
    contact->add_option("P", params_text, "parameters 'alpha,beta,gamma'")->required();
    contact->add_option("Pbar", params2_text, "parameters 'alpha,beta,gamma'")->required();
    contact->add_flag("--dual", dual, "dual contact at omega instead of contact at U");

    CLI::App* act = app.add_subcommand("act", "apply a group element to a family curve");
    act->add_option("g", group_text, "group element 'a,b,c'")->required();
    act->add_option("P", params_text, "parameters 'alpha,beta,gamma'")->required();
    act->add_option("--u", u_texts, "parameter values to verify pointwise");

    CLI::App* identify = app.add_subcommand("identify", "recover parameters from sampled points");
    identify->add_option("file", file_path, "JSON array of 4-arrays of rational strings")
        ->required();

    CLI::App* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("name", suite_name, "theorem1 | brauner-action | curvature | asymptotic | "
                                          "dual-link | identify | group-laws | all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(opts, point_text);
        if (curve->parsed()) return cmd_curve(opts, params_text, u_texts);
        if (contact->parsed()) return cmd_contact(opts, params_text, params2_text, dual);
        if (act->parsed()) return cmd_act(opts, group_text, params_text, u_texts);
        if (identify->parsed()) return cmd_identify(opts, file_path);
        if (suite->parsed()) return cmd_suite(opts, suite_name);
    } catch (const cayley::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == cayley::errc::internal ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
