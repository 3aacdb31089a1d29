#include "lvcomp/nullclines.hpp"

#include <algorithm>

namespace lvcomp {

const char* to_string(FlowDirection d) {
    switch (d) {
        case FlowDirection::Up: return "up";
        case FlowDirection::Down: return "down";
        case FlowDirection::Left: return "left";
        case FlowDirection::Right: return "right";
        case FlowDirection::Stationary: return "stationary";
    }
    return "?";
}

const char* to_string(RegionKind k) {
    switch (k) {
        case RegionKind::G1: return "G1";
        case RegionKind::G2: return "G2";
        case RegionKind::G1Mirror: return "G1-mirror";
        case RegionKind::G2Mirror: return "G2-mirror";
    }
    return "?";
}

RationalPoint Nullcline::point_at(const Rational& param) const {
    RationalPoint x;
    if (vertical) {
        x << Rational(0), param;
    } else {
        x << param, intercept + slope * param;
    }
    return x;
}

std::string Nullcline::equation() const {
    if (vertical) return "x1 = 0";
    if (slope.sign() == 0) return "x2 = " + to_string(intercept);
    return "x2 = " + to_string(intercept) + " + (" + to_string(slope) + ") x1";
}

namespace {

FlowDirection vertical_flow(const Rational& x2_dot) {
    switch (sign_of(x2_dot)) {
        case Sign::Pos: return FlowDirection::Up;
        case Sign::Neg: return FlowDirection::Down;
        case Sign::Zero: return FlowDirection::Stationary;
    }
    return FlowDirection::Stationary;
}

FlowDirection horizontal_flow(const Rational& x1_dot) {
    switch (sign_of(x1_dot)) {
        case Sign::Pos: return FlowDirection::Right;
        case Sign::Neg: return FlowDirection::Left;
        case Sign::Zero: return FlowDirection::Stationary;
    }
    return FlowDirection::Stationary;
}

// Splits the curve at the sorted distinct breakpoints and tags each open
// piece by its direction at an interior sample.
void segment(const SystemParams& params, Nullcline& curve, std::vector<Rational> breaks) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    curve.breakpoints = breaks;
    curve.segments.clear();
    auto push = [&](std::optional<Rational> from, std::optional<Rational> to, const Rational& probe) {
        curve.segments.push_back({std::move(from), std::move(to), direction_on(params, curve, probe)});
    };
    if (breaks.empty()) {
        push(std::nullopt, std::nullopt, Rational(0));
        return;
    }
    push(std::nullopt, breaks.front(), breaks.front() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        push(breaks[i], breaks[i + 1], (breaks[i] + breaks[i + 1]) / 2);
    }
    push(breaks.back(), std::nullopt, breaks.back() + 1);
}

}  // namespace

FlowDirection direction_on(const SystemParams& p, const Nullcline& curve, const Rational& param) {
    const DeterminantTriple d = compute_determinants(p);
    if (curve.vertical) {
        // x1 = 0:  x2' = x2 (b2 - a22 x2)
        return vertical_flow(param * (p.b2() - p.a22() * param));
    }
    const RationalPoint x = curve.point_at(param);
    if (curve.family == NullclineFamily::X1) {
        if (curve.slope.sign() == 0 && curve.intercept.sign() == 0) {
            // x2 = 0 belongs to the x2 family; kept for completeness.
            return horizontal_flow(x(0) * (p.b1() - p.a11() * x(0)));
        }
        // On x2 = (b1 - a11 x1)/a12:  x2' = x2 (d122 + d12 x1) / a12
        return vertical_flow(x(1) * (d.d122 + d.d12 * x(0)) / p.a12());
    }
    if (curve.slope.sign() == 0 && curve.intercept.sign() == 0) {
        // x2 = 0:  x1' = x1 (b1 - a11 x1)
        return horizontal_flow(x(0) * (p.b1() - p.a11() * x(0)));
    }
    // On x2 = (b2 - a21 x1)/a22:  x1' = -x1 (d122 + d12 x1) / a22
    return horizontal_flow(-x(0) * (d.d122 + d.d12 * x(0)) / p.a22());
}

NullclineSet nullclines(const SystemParams& p) {
    const DeterminantTriple d = compute_determinants(p);
    NullclineSet set;

    set.x1_axis.family = NullclineFamily::X1;
    set.x1_axis.vertical = true;
    segment(p, set.x1_axis, {Rational(0), p.b2() / p.a22()});

    set.x2_axis.family = NullclineFamily::X2;
    segment(p, set.x2_axis, {Rational(0), p.b1() / p.a11()});

    std::vector<Rational> interior_break;
    if (d.d12.sign() != 0) interior_break.push_back(-d.d122 / d.d12);

    set.x1_oblique.family = NullclineFamily::X1;
    set.x1_oblique.intercept = p.b1() / p.a12();
    set.x1_oblique.slope = -p.a11() / p.a12();
    {
        std::vector<Rational> breaks = interior_break;
        breaks.push_back(p.b1() / p.a11());
        segment(p, set.x1_oblique, breaks);
    }

    set.x2_oblique.family = NullclineFamily::X2;
    set.x2_oblique.intercept = p.b2() / p.a22();
    set.x2_oblique.slope = -p.a21() / p.a22();
    {
        std::vector<Rational> breaks = interior_break;
        breaks.push_back(Rational(0));
        segment(p, set.x2_oblique, breaks);
    }
    return set;
}

std::pair<Rational, Rational> ProbeRegion::bounds_at(const Rational& c) const {
    const SystemParams& p = params_;
    if (kind_ == RegionKind::G1 || kind_ == RegionKind::G2) {
        return {(p.b2() - p.a21() * c) / p.a22(), (p.b1() - p.a11() * c) / p.a12()};
    }
    return {(p.b1() - p.a12() * c) / p.a11(), (p.b2() - p.a22() * c) / p.a21()};
}

bool ProbeRegion::contains(const RationalPoint& x) const {
    switch (kind_) {
        case RegionKind::G1:
        case RegionKind::G2: {
            const auto [lo, hi] = bounds_at(x(0));
            const bool inside = lo < x(1) && x(1) < hi;
            return kind_ == RegionKind::G1 ? inside && x(1).sign() > 0 : inside;
        }
        case RegionKind::G1Mirror:
        case RegionKind::G2Mirror: {
            const auto [lo, hi] = bounds_at(x(1));
            const bool inside = lo < x(0) && x(0) < hi;
            return kind_ == RegionKind::G1Mirror ? inside && x(0).sign() > 0 : inside;
        }
    }
    return false;
}

std::string ProbeRegion::description() const {
    switch (kind_) {
        case RegionKind::G1: return "(b2 - a21 x1)/a22 < x2 < (b1 - a11 x1)/a12, x2 > 0";
        case RegionKind::G2: return "(b2 - a21 x1)/a22 < x2 < (b1 - a11 x1)/a12";
        case RegionKind::G1Mirror: return "(b1 - a12 x2)/a11 < x1 < (b2 - a22 x2)/a21, x1 > 0";
        case RegionKind::G2Mirror: return "(b1 - a12 x2)/a11 < x1 < (b2 - a22 x2)/a21";
    }
    return "";
}

}  // namespace lvcomp
