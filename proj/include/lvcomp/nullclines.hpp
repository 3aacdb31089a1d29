#pragma once

#include "lvcomp/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lvcomp {

enum class FlowDirection { Up, Down, Left, Right, Stationary };

[[nodiscard]] const char* to_string(FlowDirection d);

/// Which derivative vanishes on the curve: x1' (flow vertical) or x2' (flow
/// horizontal).
enum class NullclineFamily { X1, X2 };

struct NullclineSegment {
    /// Curve parameter bounds; nullopt is unbounded.
    std::optional<Rational> from;
    std::optional<Rational> to;
    FlowDirection direction = FlowDirection::Stationary;
};

/// Either the vertical axis x1 = 0 (parametrized by x2) or a line
/// x2 = intercept + slope * x1 (parametrized by x1).
struct Nullcline {
    NullclineFamily family = NullclineFamily::X1;
    bool vertical = false;
    Rational intercept;
    Rational slope;
    std::vector<Rational> breakpoints;
    std::vector<NullclineSegment> segments;

    [[nodiscard]] RationalPoint point_at(const Rational& param) const;
    [[nodiscard]] std::string equation() const;
};

struct NullclineSet {
    Nullcline x1_axis;     // x1 = 0
    Nullcline x1_oblique;  // x2 = (b1 - a11 x1) / a12
    Nullcline x2_axis;     // x2 = 0
    Nullcline x2_oblique;  // x2 = (b2 - a21 x1) / a22
};

[[nodiscard]] NullclineSet nullclines(const SystemParams& params);

/// Exact flow direction on a nullcline point, from the substituted
/// one-component expressions.
[[nodiscard]] FlowDirection direction_on(const SystemParams& params, const Nullcline& curve, const Rational& param);

/// Open wedges between the two oblique nullclines used to establish the side
/// behaviour of a non-hyperbolic axis equilibrium. G1/G2 sit next to E2,
/// the mirrors next to E1.
enum class RegionKind {
    G1,        // (b2 - a21 x1)/a22 < x2 < (b1 - a11 x1)/a12, x2 > 0
    G2,        // (b2 - a21 x1)/a22 < x2 < (b1 - a11 x1)/a12
    G1Mirror,  // (b1 - a12 x2)/a11 < x1 < (b2 - a22 x2)/a21, x1 > 0
    G2Mirror,  // (b1 - a12 x2)/a11 < x1 < (b2 - a22 x2)/a21
};

[[nodiscard]] const char* to_string(RegionKind k);

class ProbeRegion {
public:
    ProbeRegion(SystemParams params, RegionKind kind) : params_(std::move(params)), kind_(kind) {}

    [[nodiscard]] RegionKind kind() const { return kind_; }
    [[nodiscard]] bool contains(const RationalPoint& x) const;
    [[nodiscard]] std::string description() const;

    /// Lower and upper boundary of the wedge at the given coordinate along
    /// the cross-section direction (x1 for G1/G2, x2 for the mirrors).
    [[nodiscard]] std::pair<Rational, Rational> bounds_at(const Rational& coordinate) const;

private:
    SystemParams params_;
    RegionKind kind_;
};

}  // namespace lvcomp
