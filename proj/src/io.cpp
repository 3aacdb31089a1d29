#include "lvcomp/io.hpp"

#include <cstdio>
#include <ostream>

namespace lvcomp {

namespace {

Rational rational_from_json(const Json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw ParseError(what + " must be a number or a numeric string");
}

Json fraction(const Rational& r) { return to_string(r); }

Json optional_fraction(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

}  // namespace

SystemParams params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("b") || !j.contains("a")) {
        throw ParseError("parameters need keys \"b\" and \"a\"");
    }
    const Json& b = j.at("b");
    const Json& a = j.at("a");
    if (!b.is_array() || b.size() != 2) throw ParseError("\"b\" must hold two entries");
    if (!a.is_array() || a.size() != 2 || !a[0].is_array() || !a[1].is_array() || a[0].size() != 2 ||
        a[1].size() != 2) {
        throw ParseError("\"a\" must be a 2x2 nested array");
    }
    return SystemParams(rational_from_json(b[0], "b1"), rational_from_json(b[1], "b2"),
                        rational_from_json(a[0][0], "a11"), rational_from_json(a[0][1], "a12"),
                        rational_from_json(a[1][0], "a21"), rational_from_json(a[1][1], "a22"));
}

Json to_json(const SystemParams& p) {
    // Explicit arrays: a braced pair led by a string would become an object.
    return Json{{"b", Json::array({fraction(p.b1()), fraction(p.b2())})},
                {"a", Json::array({Json::array({fraction(p.a11()), fraction(p.a12())}),
                                   Json::array({fraction(p.a21()), fraction(p.a22())})})}};
}

Json to_json(const SurdValue& v) {
    if (v.is_rational()) return fraction(v.p / v.r);
    return Json{{"p", fraction(v.p)}, {"q", fraction(v.q)}, {"r", fraction(v.r)}, {"branch", v.branch}};
}

Json to_json(const RationalPoint& x) { return Json::array({fraction(x(0)), fraction(x(1))}); }

Json to_json(const Equilibrium& eq) {
    Json j{{"kind", to_string(eq.kind)},
           {"point", to_json(eq.point)},
           {"eigenvalues", {to_json(eq.eigenvalues.lambda1), to_json(eq.eigenvalues.lambda2)}},
           {"hyperbolic", eq.eigenvalues.hyperbolic()},
           {"in_closed_quadrant", eq.in_closed_quadrant()}};
    if (eq.coincides_with) j["coincides_with"] = to_string(*eq.coincides_with);
    if (eq.alpha) j["alpha"] = fraction(*eq.alpha);
    return j;
}

Json to_json(const EquilibriumSet& set) {
    Json points = Json::array();
    for (const auto& eq : set.points) points.push_back(to_json(eq));
    Json j{{"equilibria", points}};
    if (set.line) {
        j["line"] = {{"alpha_min", fraction(set.line->alpha_min)}, {"alpha_max", fraction(set.line->alpha_max)}};
    } else {
        j["line"] = nullptr;
    }
    return j;
}

Json to_json(const StabilityClass& cls) {
    return Json{{"verdict", to_string(cls.verdict)},
                {"label", short_label(cls.verdict)},
                {"scope", to_string(cls.scope)},
                {"basis", to_string(cls.basis)}};
}

Json to_json(const DeterminantTriple& d) {
    return Json{{"d12", fraction(d.d12)}, {"d112", fraction(d.d112)}, {"d122", fraction(d.d122)}};
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["determinants"] = to_json(r.determinants);
    j["sign_triple"] = to_string(r.sign_case.triple);
    j["sign_case"] = {{"feasible", r.sign_case.feasible},
                      {"serial", r.sign_case.table6_serial ? Json(*r.sign_case.table6_serial) : Json(nullptr)},
                      {"representative", r.sign_case.representative}};
    j["portrait_class_full"] = r.portrait_class_full;
    j["portrait_class_quadrant"] = r.portrait_class_quadrant;
    j["reference_portrait"] = reference_portrait(r.portrait_class_full);
    Json eqs = Json::array();
    for (const auto& v : r.equilibria) {
        Json e = to_json(v.equilibrium);
        e["full"] = to_json(v.full);
        e["quadrant"] = to_json(v.quadrant);
        eqs.push_back(std::move(e));
    }
    j["equilibria"] = std::move(eqs);
    if (r.line && r.line_member) {
        j["line"] = {{"alpha_min", fraction(r.line->alpha_min)},
                     {"alpha_max", fraction(r.line->alpha_max)},
                     {"member", to_json(r.line_member->equilibrium)},
                     {"full", to_json(r.line_member->full)},
                     {"quadrant", to_json(r.line_member->quadrant)}};
    } else {
        j["line"] = nullptr;
    }
    if (r.off_quadrant_interior) {
        Json e = to_json(*r.off_quadrant_interior);
        e["full"] = r.off_quadrant_class ? to_json(*r.off_quadrant_class) : Json(nullptr);
        j["off_quadrant_interior"] = std::move(e);
    } else {
        j["off_quadrant_interior"] = nullptr;
    }
    return j;
}

Json to_json(const Nullcline& c) {
    Json segs = Json::array();
    for (const auto& s : c.segments) {
        segs.push_back({{"from", optional_fraction(s.from)}, {"to", optional_fraction(s.to)},
                        {"direction", to_string(s.direction)}});
    }
    Json breaks = Json::array();
    for (const auto& b : c.breakpoints) breaks.push_back(fraction(b));
    return Json{{"equation", c.equation()},
                {"vanishing", c.family == NullclineFamily::X1 ? "x1'" : "x2'"},
                {"parameter", c.vertical ? "x2" : "x1"},
                {"breakpoints", breaks},
                {"segments", segs}};
}

Json to_json(const NullclineSet& s) {
    return Json{{"x1_nullclines", {to_json(s.x1_axis), to_json(s.x1_oblique)}},
                {"x2_nullclines", {to_json(s.x2_axis), to_json(s.x2_oblique)}}};
}

Json to_json(const RootEnclosure& r) {
    if (r.exact()) return Json{{"exact", fraction(r.lo)}};
    return Json{{"interval", {fraction(r.lo), fraction(r.hi)}}, {"approx", to_double(r.midpoint())}};
}

Json to_json(const SideSummary& s) {
    auto cls = [](const std::optional<StabilityClass>& c) { return c ? to_json(*c) : Json(nullptr); };
    return Json{{"s", fraction(s.s)},
                {"sign_triple", to_string(s.signs)},
                {"serial", s.serial},
                {"origin", cls(s.origin_class)},
                {"axis", cls(s.axis_class)},
                {"interior", cls(s.interior_class)},
                {"interior_point", s.interior_point ? to_json(*s.interior_point) : Json(nullptr)},
                {"interior_in_quadrant", s.interior_in_quadrant},
                {"a22_d112_lt_a11_d122", s.parenthetical_held}};
}

Json to_json(const BifurcationEvent& ev) {
    return Json{{"s_star", to_json(ev.s_star)},
                {"determinant", to_string(ev.which)},
                {"kind", to_string(ev.kind)},
                {"colliding_pair", ev.colliding_axis ? Json::array({"E12", to_string(*ev.colliding_axis)}) : Json(nullptr)},
                {"before", to_json(ev.before)},
                {"after", to_json(ev.after)},
                {"trace_condition_held", ev.trace_condition_held},
                {"collision_verified", ev.collision_verified},
                {"co_located", ev.co_located},
                {"determinants_at_root", ev.at_root ? to_json(*ev.at_root) : Json(nullptr)}};
}

Json to_json(const ScanResult& scan) {
    Json events = Json::array();
    for (const auto& e : scan.events) events.push_back(to_json(e));
    auto roots = [](const std::vector<Tangency>& list) {
        Json out = Json::array();
        for (const auto& t : list) out.push_back({{"s", to_json(t.s)}, {"determinant", to_string(t.which)}});
        return out;
    };
    return Json{{"events", events}, {"tangencies", roots(scan.tangencies)}, {"endpoint_roots", roots(scan.endpoint_roots)}};
}

Json to_json(const OracleComparison& c) {
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& p : c.empirical.probes) ++counts[static_cast<int>(p.outcome)];
    return Json{{"equilibrium", to_string(c.kind)},
                {"point", to_json(c.point)},
                {"scope", to_string(c.scope)},
                {"analytic", to_json(c.analytic)},
                {"expected", to_string(c.expected)},
                {"empirical", to_string(c.empirical.verdict)},
                {"agrees", c.agrees()},
                {"probe_radius", c.empirical.radius},
                {"probes",
                 {{"converged", counts[0]}, {"escaped", counts[1]}, {"settled", counts[2]}, {"undetermined", counts[3]}}}};
}

std::string format_double(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,x1,x2\n";
    for (const auto& s : traj.samples) {
        out << format_double(s.t, 17) << ',' << format_double(s.x(0), 17) << ',' << format_double(s.x(1), 17) << '\n';
    }
}

}  // namespace lvcomp
