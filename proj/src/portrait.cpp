#include "lvcomp/portrait.hpp"

#include "lvcomp/dynamics.hpp"
#include "lvcomp/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lvcomp {

const char* verdict_color(Verdict v) {
    switch (v) {
        case Verdict::UnstableNode:
        case Verdict::Saddle:
        case Verdict::Unstable: return "yellow";
        case Verdict::StableNode:
        case Verdict::AsymptoticallyStable: return "red";
        case Verdict::SemiStable: return "orange";
        case Verdict::NonIsolated: return "pink";
    }
    return "gray";
}

Viewport default_viewport(const ClassificationReport& report) {
    Rational x_extent = 1, y_extent = 1;
    for (const auto& v : report.equilibria) {
        x_extent = std::max(x_extent, v.equilibrium.point(0));
        y_extent = std::max(y_extent, v.equilibrium.point(1));
    }
    const Rational margin{1, 10};
    return {-margin * x_extent, (1 + margin) * x_extent, -margin * y_extent, (1 + margin) * y_extent};
}

namespace {

struct Canvas {
    double x0, x1, y0, y1;
    int w, h;

    [[nodiscard]] double px(double x) const { return (x - x0) / (x1 - x0) * w; }
    [[nodiscard]] double py(double y) const { return h - (y - y0) / (y1 - y0) * h; }
    [[nodiscard]] bool inside(const Eigen::Vector2d& p) const {
        return p(0) >= x0 && p(0) <= x1 && p(1) >= y0 && p(1) <= y1;
    }
};

std::string num(double v) { return format_double(v, 6); }

// Clips the segment p + t (q - p), t in [0, 1], to the canvas rectangle.
bool clip(const Canvas& c, Eigen::Vector2d& p, Eigen::Vector2d& q) {
    double t0 = 0.0, t1 = 1.0;
    const Eigen::Vector2d d = q - p;
    const double lo[2] = {c.x0, c.y0};
    const double hi[2] = {c.x1, c.y1};
    for (int i = 0; i < 2; ++i) {
        if (d(i) == 0.0) {
            if (p(i) < lo[i] || p(i) > hi[i]) return false;
            continue;
        }
        double a = (lo[i] - p(i)) / d(i);
        double b = (hi[i] - p(i)) / d(i);
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
        if (t0 > t1) return false;
    }
    const Eigen::Vector2d start = p + t0 * d;
    q = p + t1 * d;
    p = start;
    return true;
}

void draw_segment(std::ostream& out, const Canvas& c, Eigen::Vector2d p, Eigen::Vector2d q, const char* cls,
                  const char* stroke, const char* extra = "") {
    if (!clip(c, p, q)) return;
    out << "<line class=\"" << cls << "\" x1=\"" << num(c.px(p(0))) << "\" y1=\"" << num(c.py(p(1))) << "\" x2=\""
        << num(c.px(q(0))) << "\" y2=\"" << num(c.py(q(1))) << "\" stroke=\"" << stroke << "\"" << extra << "/>\n";
}

void draw_nullcline(std::ostream& out, const Canvas& c, const Nullcline& n, const char* stroke) {
    const char* dashed = " stroke-width=\"1.5\" stroke-dasharray=\"6,4\"";
    if (n.vertical) {
        draw_segment(out, c, {0.0, c.y0}, {0.0, c.y1}, "nullcline", stroke, dashed);
        return;
    }
    const double b = to_double(n.intercept);
    const double m = to_double(n.slope);
    draw_segment(out, c, {c.x0, b + m * c.x0}, {c.x1, b + m * c.x1}, "nullcline", stroke, dashed);
}

}  // namespace

std::string render_portrait(const SystemParams& params, const PortraitSpec& spec) {
    const ClassificationReport report = classify(params);
    const Viewport vp = spec.viewport.value_or(default_viewport(report));
    if (!(vp.x_min < vp.x_max) || !(vp.y_min < vp.y_max)) throw std::invalid_argument("empty viewport");
    const Canvas c{to_double(vp.x_min), to_double(vp.x_max), to_double(vp.y_min), to_double(vp.y_max),
                   spec.width_px, spec.height_px};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.w << "\" height=\"" << c.h + 60
        << "\" viewBox=\"0 0 " << c.w << ' ' << c.h + 60 << "\">\n";
    out << "<defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
           "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"gray\"/></marker></defs>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << c.w << "\" height=\"" << c.h << "\" fill=\"white\" stroke=\"black\"/>\n";

    draw_segment(out, c, {c.x0, 0.0}, {c.x1, 0.0}, "axis", "black");
    draw_segment(out, c, {0.0, c.y0}, {0.0, c.y1}, "axis", "black");

    const NullclineSet ns = nullclines(params);
    draw_nullcline(out, c, ns.x1_oblique, "steelblue");
    draw_nullcline(out, c, ns.x2_oblique, "seagreen");

    if (spec.arrow_grid > 0) {
        const auto coeffs = params.as<double>();
        const double len = 0.35 * std::min(c.w, c.h) / spec.arrow_grid;
        for (int i = 0; i < spec.arrow_grid; ++i) {
            for (int j = 0; j < spec.arrow_grid; ++j) {
                const Eigen::Vector2d x(c.x0 + (i + 0.5) / spec.arrow_grid * (c.x1 - c.x0),
                                        c.y0 + (j + 0.5) / spec.arrow_grid * (c.y1 - c.y0));
                const Eigen::Vector2d f = vector_field(coeffs, x);
                // Screen-space direction, y flipped.
                Eigen::Vector2d d(f(0) / (c.x1 - c.x0) * c.w, -f(1) / (c.y1 - c.y0) * c.h);
                if (d.norm() == 0.0) continue;
                d *= len / d.norm();
                const double sx = c.px(x(0)), sy = c.py(x(1));
                out << "<line class=\"arrow\" x1=\"" << num(sx - d(0) / 2) << "\" y1=\"" << num(sy - d(1) / 2)
                    << "\" x2=\"" << num(sx + d(0) / 2) << "\" y2=\"" << num(sy + d(1) / 2)
                    << "\" stroke=\"gray\" marker-end=\"url(#arrow)\"/>\n";
            }
        }
    }

    if (spec.seed_grid > 0) {
        IntegratorOptions opts;
        opts.rel_tol = 1e-7;
        opts.abs_tol = 1e-10;
        opts.max_step = spec.horizon / 200.0;
        const double qx1 = std::max(c.x1, 0.0), qy1 = std::max(c.y1, 0.0);
        for (int i = 0; i < spec.seed_grid; ++i) {
            for (int j = 0; j < spec.seed_grid; ++j) {
                const Eigen::Vector2d start((i + 0.5) / spec.seed_grid * qx1, (j + 0.5) / spec.seed_grid * qy1);
                const Trajectory traj = integrate(params, start, spec.horizon, opts);
                out << "<polyline class=\"trajectory\" fill=\"none\" stroke=\"black\" stroke-width=\"0.8\" points=\"";
                bool first = true;
                for (const auto& s : traj.samples) {
                    if (!c.inside(s.x)) break;
                    out << (first ? "" : " ") << num(c.px(s.x(0))) << ',' << num(c.py(s.x(1)));
                    first = false;
                }
                out << "\"/>\n";
            }
        }
    }

    if (report.line) {
        const RationalPoint a = report.line->at(params, report.line->alpha_min);
        const RationalPoint b = report.line->at(params, report.line->alpha_max);
        draw_segment(out, c, {to_double(a(0)), to_double(a(1))}, {to_double(b(0)), to_double(b(1))},
                     "equilibrium-line", verdict_color(Verdict::NonIsolated), " stroke-width=\"4\"");
    }

    for (const auto& v : report.equilibria) {
        const StabilityClass& cls = spec.color_scope == Scope::FullNeighborhood ? v.full : v.quadrant;
        const double x = to_double(v.equilibrium.point(0)), y = to_double(v.equilibrium.point(1));
        out << "<circle class=\"equilibrium\" data-kind=\"" << to_string(v.equilibrium.kind) << "\" data-x=\""
            << to_string(v.equilibrium.point(0)) << "\" data-y=\"" << to_string(v.equilibrium.point(1))
            << "\" data-verdict=\"" << to_string(cls.verdict) << "\" cx=\"" << num(c.px(x)) << "\" cy=\""
            << num(c.py(y)) << "\" r=\"6\" fill=\"" << verdict_color(cls.verdict) << "\" stroke=\"black\"/>\n";
    }

    out << "<text class=\"legend\" x=\"8\" y=\"" << c.h + 22 << "\" font-family=\"monospace\" font-size=\"13\">"
        << "signs (d12,d112,d122) = " << to_string(report.sign_case.triple) << ", portrait class "
        << report.portrait_class_full << " (" << reference_portrait(report.portrait_class_full) << ")</text>\n";
    out << "<text class=\"legend\" x=\"8\" y=\"" << c.h + 44 << "\" font-family=\"monospace\" font-size=\"13\">"
        << "yellow: unstable  red: asymptotically stable  orange: semi-stable  pink: non-isolated</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace lvcomp
