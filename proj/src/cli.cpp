#include "lvcomp/cli.hpp"

#include "lvcomp/bifurcation.hpp"
#include "lvcomp/io.hpp"
#include "lvcomp/oracle.hpp"
#include "lvcomp/portrait.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace lvcomp {

namespace {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
    std::string b;
    std::string a;
    std::string input;
    std::string figure;
    std::string scope;
    std::string out_path;
    std::uint64_t seed = 1;
    bool json = false;
};

void add_param_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--b", o.b, "growth rates b1,b2");
    cmd->add_option("--a", o.a, "interaction matrix a11,a12,a21,a22");
    cmd->add_option("--input", o.input, "parameter JSON file");
    cmd->add_option("--figure", o.figure, "reference parameter set (1a, 1b, 2a, 2b, 3a, 3b, 4a, 4b, 5)");
}

void add_output_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_flag("--json", o.json, "machine-readable output");
    cmd->add_option("--out", o.out_path, "write the result to this file instead of stdout");
}

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    if (values.size() != expected) {
        throw InputError(flag + " needs " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
    }
    return values;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

SystemParams figure_params(const std::string& label) {
    const auto p = reference_params(label);
    if (!p) throw InputError("unknown reference set '" + label + "'");
    return *p;
}

std::optional<SystemParams> params_from(const std::string& b, const std::string& a, const std::string& input,
                                        const std::string& figure) {
    const int sources = !b.empty() + !input.empty() + !figure.empty();
    if (sources == 0 && a.empty()) return std::nullopt;
    if (sources > 1) throw InputError("give parameters through exactly one of --b/--a, --input or --figure");
    if (!figure.empty()) return figure_params(figure);
    if (!input.empty()) return params_from_json(read_json_file(input));
    if (b.empty() || a.empty()) throw InputError("--b and --a must be given together");
    const auto bv = parse_list(b, 2, "--b");
    const auto av = parse_list(a, 4, "--a");
    return SystemParams(bv[0], bv[1], av[0], av[1], av[2], av[3]);
}

SystemParams require_params(const CommonOptions& o) {
    auto p = params_from(o.b, o.a, o.input, o.figure);
    if (!p) throw InputError("no parameters given; use --b/--a, --input or --figure");
    return *p;
}

/// Writes to --out when given, stdout otherwise.
void emit(const CommonOptions& o, std::ostream& out, const std::string& text) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out_path);
    file << text;
    if (!file) throw std::runtime_error("write failed for " + o.out_path);
}

std::string point_text(const RationalPoint& x) { return "(" + to_string(x(0)) + ", " + to_string(x(1)) + ")"; }

std::string class_text(const StabilityClass& c) {
    return std::string(short_label(c.verdict)) + " " + to_string(c.verdict) + " [" + to_string(c.basis) + "]";
}

std::string classify_text(const ClassificationReport& r, bool table6) {
    std::ostringstream s;
    s << "signs (d12, d112, d122) = " << to_string(r.sign_case.triple) << "   d12 = " << to_string(r.determinants.d12)
      << ", d112 = " << to_string(r.determinants.d112) << ", d122 = " << to_string(r.determinants.d122) << "\n";
    s << "portrait class " << r.portrait_class_full << " (closed quadrant class " << r.portrait_class_quadrant << ")\n";
    if (table6) {
        s << "serial " << r.portrait_class_full << ", reference portrait " << reference_portrait(r.portrait_class_full)
          << "\n";
    }
    for (const auto& v : r.equilibria) {
        s << std::left << std::setw(6) << to_string(v.equilibrium.kind) << std::setw(14) << point_text(v.equilibrium.point)
          << " plane: " << std::setw(42) << class_text(v.full) << " quadrant: " << class_text(v.quadrant) << "\n";
    }
    if (r.line && r.line_member) {
        s << "line of equilibria x1 = (b1 - a12 alpha)/a11, x2 = alpha for alpha in [" << to_string(r.line->alpha_min)
          << ", " << to_string(r.line->alpha_max) << "]: " << class_text(r.line_member->full) << "\n";
    }
    if (r.off_quadrant_interior) {
        s << "E12 outside the quadrant at " << point_text(r.off_quadrant_interior->point);
        if (r.off_quadrant_class) s << ": " << class_text(*r.off_quadrant_class);
        s << "\n";
    }
    return s.str();
}

std::string eigen_text(const SurdValue& v) {
    if (v.is_rational()) return to_string(v.p / v.r);
    std::ostringstream s;
    s << "(" << to_string(v.p) << (v.branch > 0 ? " + " : " - ") << "sqrt(" << to_string(v.q) << "))/" << to_string(v.r);
    return s.str();
}

std::optional<Scope> scope_from(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text == "quadrant") return Scope::FirstQuadrantClosed;
    if (text == "plane") return Scope::FullNeighborhood;
    throw InputError("--scope must be 'quadrant' or 'plane', got '" + text + "'");
}

struct VerifyCase {
    std::string label;
    SystemParams params;
};

int cmd_verify(const CommonOptions& o, const std::vector<VerifyCase>& cases, double horizon, std::ostream& out) {
    const auto scope = scope_from(o.scope);
    ProbeProtocol protocol;
    protocol.horizon = horizon;

    std::size_t disagreements = 0, inconclusive = 0;
    Json jcases = Json::array();
    std::ostringstream text;
    for (const auto& c : cases) {
        Json jc{{"label", c.label}, {"params", to_json(c.params)}};
        Json comparisons = Json::array();
        text << c.label << "  " << to_string(classify(c.params).sign_case.triple) << "\n";
        for (const auto& cmp : compare_with_classifier(c.params, protocol)) {
            const bool wanted = !scope || (*scope == Scope::FirstQuadrantClosed) == (cmp.scope == ProbeScope::FirstQuadrant);
            if (!wanted) continue;
            if (cmp.inconclusive()) {
                ++inconclusive;
            } else if (!cmp.agrees()) {
                ++disagreements;
            }
            comparisons.push_back(to_json(cmp));
            text << "  " << std::left << std::setw(7) << to_string(cmp.kind) << std::setw(15) << to_string(cmp.scope)
                 << std::setw(24) << to_string(cmp.analytic.verdict) << "expected " << std::setw(28)
                 << to_string(cmp.expected) << "got " << to_string(cmp.empirical.verdict)
                 << (cmp.agrees() ? "" : "   MISMATCH") << "\n";
        }
        Json theorem = Json::array();
        for (const auto& d : cross_check_theorems(c.params)) {
            ++disagreements;
            theorem.push_back({{"predicate", d.predicate}, {"theorem", d.theorem}, {"classified", d.classified}});
            text << "  theorem check " << d.predicate << " disagrees\n";
        }
        jc["comparisons"] = std::move(comparisons);
        jc["theorem_disagreements"] = std::move(theorem);
        jcases.push_back(std::move(jc));
    }
    text << "disagreements: " << disagreements << ", inconclusive: " << inconclusive << "\n";
    if (o.json) {
        Json j{{"cases", jcases}, {"disagreements", disagreements}, {"inconclusive", inconclusive}};
        emit(o, out, j.dump(2) + "\n");
    } else {
        emit(o, out, text.str());
    }
    return disagreements == 0 && inconclusive == 0 ? kExitOk : kExitComputeError;
}

void print_error(std::ostream& err, const char* kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planar competitive Lotka-Volterra: exact classification, simulation and sweeps", "lvcomp"};
    app.require_subcommand(1);

    CommonOptions o;
    bool table6 = false;
    std::string start_text = "1,1";
    double horizon = 100.0;
    double rel_tol = 1e-9, abs_tol = 1e-12;
    int seeds = 6, arrows = 12;
    std::string viewport_text;
    std::size_t random_draws = 0;
    std::string to_b, to_a, to_input, to_figure;
    std::size_t steps = 0;

    auto* classify_cmd = app.add_subcommand("classify", "classify every equilibrium");
    add_param_options(classify_cmd, o);
    add_output_options(classify_cmd, o);
    classify_cmd->add_flag("--table6", table6, "print the portrait serial and reference portrait");

    auto* equilibria_cmd = app.add_subcommand("equilibria", "list equilibria with exact eigenvalues");
    add_param_options(equilibria_cmd, o);
    add_output_options(equilibria_cmd, o);
    equilibria_cmd->add_option("--scope", o.scope, "quadrant (default) or plane, which adds an off-quadrant E12");

    auto* nullclines_cmd = app.add_subcommand("nullclines", "nullclines with flow direction on each piece");
    add_param_options(nullclines_cmd, o);
    add_output_options(nullclines_cmd, o);

    auto* simulate_cmd = app.add_subcommand("simulate", "integrate one trajectory and print CSV");
    add_param_options(simulate_cmd, o);
    simulate_cmd->add_option("--out", o.out_path, "CSV file");
    simulate_cmd->add_option("--start", start_text, "initial point x1,x2");
    simulate_cmd->add_option("--horizon", horizon, "final time");
    simulate_cmd->add_option("--rtol", rel_tol, "relative tolerance");
    simulate_cmd->add_option("--atol", abs_tol, "absolute tolerance");

    auto* portrait_cmd = app.add_subcommand("portrait", "render an SVG phase portrait");
    add_param_options(portrait_cmd, o);
    portrait_cmd->add_option("--out", o.out_path, "SVG file");
    portrait_cmd->add_option("--scope", o.scope, "verdict used for colours: plane (default) or quadrant");
    portrait_cmd->add_option("--seeds", seeds, "trajectory seed grid size per axis (0 for none)");
    portrait_cmd->add_option("--arrows", arrows, "direction arrow grid size per axis (0 for none)");
    portrait_cmd->add_option("--horizon", horizon, "trajectory length");
    portrait_cmd->add_option("--viewport", viewport_text, "x_min,x_max,y_min,y_max");

    auto* verify_cmd = app.add_subcommand("verify", "compare analytic verdicts with numerical probes");
    add_param_options(verify_cmd, o);
    add_output_options(verify_cmd, o);
    verify_cmd->add_option("--scope", o.scope, "quadrant or plane (default both)");
    verify_cmd->add_option("--random", random_draws, "add this many sampled parameter sets");
    verify_cmd->add_option("--seed", o.seed, "seed for --random");
    verify_cmd->add_option("--horizon", horizon, "probe horizon (default 5e6)");

    auto* sweep_cmd = app.add_subcommand("sweep", "scan a straight parameter path for determinant crossings");
    add_param_options(sweep_cmd, o);
    add_output_options(sweep_cmd, o);
    sweep_cmd->add_option("--to-b", to_b, "end point growth rates");
    sweep_cmd->add_option("--to-a", to_a, "end point interaction matrix");
    sweep_cmd->add_option("--to-input", to_input, "end point parameter JSON file");
    sweep_cmd->add_option("--to-figure", to_figure, "end point reference set");
    sweep_cmd->add_option("--steps", steps, "also tabulate the sign case at this many equal steps");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // Resolves to the selected subcommand's help when there is one.
            out << app.help();
            return kExitOk;
        }
        print_error(err, "invalid-input", e.what());
        return kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) {
            const ClassificationReport r = classify(require_params(o));
            if (o.json) {
                Json j = to_json(r);
                if (table6) j["table6"] = {{"serial", r.portrait_class_full}, {"portrait", reference_portrait(r.portrait_class_full)}};
                emit(o, out, j.dump(2) + "\n");
            } else {
                emit(o, out, classify_text(r, table6));
            }
            return kExitOk;
        }

        if (equilibria_cmd->parsed()) {
            const auto scope = scope_from(o.scope);
            const SystemParams p = require_params(o);
            const EquilibriumSet set = find_equilibria(p, scope == Scope::FullNeighborhood);
            if (o.json) {
                emit(o, out, to_json(set).dump(2) + "\n");
            } else {
                std::ostringstream s;
                for (const auto& eq : set.points) {
                    s << std::left << std::setw(6) << to_string(eq.kind) << std::setw(16) << point_text(eq.point)
                      << "eigenvalues " << eigen_text(eq.eigenvalues.lambda1) << ", " << eigen_text(eq.eigenvalues.lambda2);
                    if (eq.coincides_with) s << "  (coincides with " << to_string(*eq.coincides_with) << ")";
                    s << "\n";
                }
                if (set.line) {
                    s << "line of equilibria for alpha in [" << to_string(set.line->alpha_min) << ", "
                      << to_string(set.line->alpha_max) << "]\n";
                }
                emit(o, out, s.str());
            }
            return kExitOk;
        }

        if (nullclines_cmd->parsed()) {
            const NullclineSet ns = nullclines(require_params(o));
            if (o.json) {
                emit(o, out, to_json(ns).dump(2) + "\n");
            } else {
                std::ostringstream s;
                for (const Nullcline* c : {&ns.x1_axis, &ns.x1_oblique, &ns.x2_axis, &ns.x2_oblique}) {
                    s << (c->family == NullclineFamily::X1 ? "x1' = 0 on " : "x2' = 0 on ") << c->equation() << "\n";
                    for (const auto& seg : c->segments) {
                        s << "  " << (c->vertical ? "x2" : "x1") << " in ("
                          << (seg.from ? to_string(*seg.from) : std::string("-inf")) << ", "
                          << (seg.to ? to_string(*seg.to) : std::string("inf")) << "): " << to_string(seg.direction) << "\n";
                    }
                }
                emit(o, out, s.str());
            }
            return kExitOk;
        }

        if (simulate_cmd->parsed()) {
            const SystemParams p = require_params(o);
            const auto start = parse_list(start_text, 2, "--start");
            IntegratorOptions opts;
            opts.rel_tol = rel_tol;
            opts.abs_tol = abs_tol;
            const Trajectory traj = integrate(p, {to_double(start[0]), to_double(start[1])}, horizon, opts);
            std::ostringstream s;
            write_csv(s, traj);
            emit(o, out, s.str());
            err << "status: " << to_string(traj.status) << ", samples: " << traj.samples.size() << "\n";
            return traj.status == Termination::StepFailure ? kExitComputeError : kExitOk;
        }

        if (portrait_cmd->parsed()) {
            const SystemParams p = require_params(o);
            PortraitSpec spec;
            spec.seed_grid = seeds;
            spec.arrow_grid = arrows;
            if (portrait_cmd->count("--horizon")) spec.horizon = horizon;
            if (seeds < 0 || arrows < 0) throw InputError("grid sizes must be nonnegative");
            if (const auto scope = scope_from(o.scope)) spec.color_scope = *scope;
            if (!viewport_text.empty()) {
                const auto v = parse_list(viewport_text, 4, "--viewport");
                spec.viewport = Viewport{v[0], v[1], v[2], v[3]};
            }
            emit(o, out, render_portrait(p, spec));
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            std::vector<VerifyCase> cases;
            if (auto p = params_from(o.b, o.a, o.input, o.figure == "all" ? std::string() : o.figure)) {
                cases.push_back({o.figure.empty() ? "input" : o.figure, *p});
            } else {
                for (const char* label : reference_labels()) cases.push_back({label, *reference_params(label)});
            }
            std::mt19937_64 rng(o.seed);
            std::vector<SignTriple> feasible;
            for (const auto& t : all_sign_triples()) {
                if (sign_case(t).feasible) feasible.push_back(t);
            }
            for (std::size_t i = 0; i < random_draws; ++i) {
                const SignTriple target = feasible[rng() % feasible.size()];
                const auto drawn = sample_params(target, rng());
                if (const auto* sp = std::get_if<SystemParams>(&drawn)) {
                    cases.push_back({"random-" + std::to_string(i), *sp});
                }
            }
            return cmd_verify(o, cases, verify_cmd->count("--horizon") ? horizon : 5e6, out);
        }

        if (sweep_cmd->parsed()) {
            const SystemParams start = require_params(o);
            const auto end = params_from(to_b, to_a, to_input, to_figure);
            if (!end) throw InputError("no end point given; use --to-b/--to-a, --to-input or --to-figure");
            const ParameterPath path{start, *end};
            const ScanResult scan = scan_path(path);
            std::vector<std::pair<Rational, SignTriple>> table;
            for (std::size_t k = 0; steps > 0 && k <= steps; ++k) {
                const Rational s(static_cast<long>(k), static_cast<long>(steps));
                table.emplace_back(s, compute_determinants(path.at(s)).signs());
            }
            if (o.json) {
                Json j = to_json(scan);
                j["start"] = to_json(start);
                j["end"] = to_json(*end);
                Json samples = Json::array();
                for (const auto& [s, t] : table) {
                    const SignCase sc = sign_case(t);
                    samples.push_back({{"s", to_string(s)}, {"sign_triple", to_string(t)},
                                       {"serial", sc.table6_serial ? Json(*sc.table6_serial) : Json(nullptr)}});
                }
                j["samples"] = std::move(samples);
                emit(o, out, j.dump(2) + "\n");
            } else {
                std::ostringstream s;
                for (const auto& ev : scan.events) {
                    s << (ev.s_star.exact() ? "s* = " + to_string(ev.s_star.lo)
                                            : "s* in (" + to_string(ev.s_star.lo) + ", " + to_string(ev.s_star.hi) + ")")
                      << "  " << to_string(ev.which) << "  " << to_string(ev.kind) << "  " << to_string(ev.before.signs)
                      << " -> " << to_string(ev.after.signs);
                    if (ev.colliding_axis) {
                        s << "  E12/" << to_string(*ev.colliding_axis) << ": axis " << to_string(ev.before.axis_coarse())
                          << " -> " << to_string(ev.after.axis_coarse()) << ", E12 " << to_string(ev.before.interior_coarse())
                          << " -> " << to_string(ev.after.interior_coarse());
                    }
                    s << "\n";
                }
                for (const auto& t : scan.tangencies) {
                    s << "tangency of " << to_string(t.which) << " at s = " << to_string(t.s.lo) << "\n";
                }
                for (const auto& t : scan.endpoint_roots) {
                    s << to_string(t.which) << " vanishes at endpoint s = " << to_string(t.s.lo) << "\n";
                }
                for (const auto& [sv, t] : table) {
                    const SignCase sc = sign_case(t);
                    s << "s = " << to_string(sv) << "  " << to_string(t) << "  serial "
                      << (sc.table6_serial ? std::to_string(*sc.table6_serial) : std::string("-")) << "\n";
                }
                if (scan.events.empty()) s << "no crossings\n";
                emit(o, out, s.str());
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        print_error(err, "invalid-input", e.what());
        return kExitInputError;
    } catch (const Json::exception& e) {
        print_error(err, "invalid-input", e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        print_error(err, "computation-failed", e.what());
        return kExitComputeError;
    }
    return kExitInputError;
}

}  // namespace lvcomp
