#pragma once

#include "lvcomp/classifier.hpp"

#include <optional>
#include <string>

namespace lvcomp {

struct Viewport {
    Rational x_min, x_max, y_min, y_max;
};

struct PortraitSpec {
    /// Defaults to every closed-quadrant equilibrium plus a 10% margin.
    std::optional<Viewport> viewport;
    /// Trajectories start on a seed_grid x seed_grid lattice in the
    /// quadrant part of the viewport; 0 draws none.
    int seed_grid = 6;
    /// Direction arrows on an arrow_grid x arrow_grid lattice; 0 draws none.
    int arrow_grid = 12;
    double horizon = 40.0;
    /// Which verdict colours the equilibria.
    Scope color_scope = Scope::FullNeighborhood;
    int width_px = 640;
    int height_px = 640;
};

/// Colour name for a verdict: yellow (unstable), red (asymptotically
/// stable), orange (semi-stable), pink (non-isolated).
[[nodiscard]] const char* verdict_color(Verdict v);

[[nodiscard]] Viewport default_viewport(const ClassificationReport& report);

/// Deterministic SVG document. Coordinates use 6 significant digits.
[[nodiscard]] std::string render_portrait(const SystemParams& params, const PortraitSpec& spec = {});

}  // namespace lvcomp
