#pragma once

// Numerical stability check for a single equilibrium: perturb it in a fan of
// directions, integrate each perturbation and summarise how the probes end.
// Used as an independent cross-check of the analytic classifier.

#include "lvcomp/classifier.hpp"
#include "lvcomp/dynamics.hpp"
#include "lvcomp/nullclines.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace lvcomp {

enum class ProbeScope { FirstQuadrant, FullPlane };

[[nodiscard]] const char* to_string(ProbeScope s);

struct ProbeProtocol {
    /// Probe radius is radius_factor * max(1, |eq|).
    double radius_factor = 1e-3;
    int directions = 16;
    double horizon = 5e6;
    ProbeScope scope = ProbeScope::FirstQuadrant;
    /// Absolute distance that counts as having returned.
    double convergence_radius = 1e-6;
    /// A probe has left once it is escape_factor * r away.
    double escape_factor = 10.0;
    /// Rest points within settle_factor * r count as nearby. Beyond it a
    /// probe has gone elsewhere.
    double settle_factor = 100.0;
    /// Once past the settle ball, how long it must stay out of the escape
    /// ball before integration stops early.
    double escape_followup = 1000.0;
    /// Extra probes placed inside the nullcline wedge next to a
    /// non-hyperbolic axis equilibrium.
    int wedge_probes = 3;
    /// Rest test for probes, relative to max(1, |eq|). It must clear the
    /// residual the step controller leaves near a stable rest point. The long
    /// window keeps slow algebraic approaches from being mistaken for rest.
    double rest_tolerance = 1e-8;
    double rest_window = 1e5;
};

enum class ProbeOutcome {
    Converged,  // came within convergence_radius
    Escaped,    // left the escape ball and did not come back
    Settled,    // came to rest near, but not at, the equilibrium
    Undetermined,
};

[[nodiscard]] const char* to_string(ProbeOutcome o);

struct ProbeResult {
    Eigen::Vector2d start = Eigen::Vector2d::Zero();
    /// Angle of the direction, or nullopt for a wedge probe.
    std::optional<double> angle;
    std::optional<RegionKind> wedge;
    ProbeOutcome outcome = ProbeOutcome::Undetermined;
    bool starts_in_quadrant = false;
    Eigen::Vector2d final_state = Eigen::Vector2d::Zero();
    double final_distance = 0.0;
    double final_time = 0.0;
    Termination termination = Termination::ReachedHorizon;
};

enum class EmpiricalVerdict {
    Attracting,
    RepellingInSomeDirection,
    /// Returns from the closed quadrant, escapes through the wedge.
    Mixed,
    /// Nothing leaves, and probes come to rest at distinct nearby points.
    Neutral,
    Inconclusive,
};

[[nodiscard]] const char* to_string(EmpiricalVerdict v);

struct EmpiricalReport {
    EmpiricalVerdict verdict = EmpiricalVerdict::Inconclusive;
    double radius = 0.0;
    std::vector<ProbeResult> probes;
};

[[nodiscard]] EmpiricalReport empirical_stability(const SystemParams& params, const Equilibrium& eq,
                                                  const ProbeProtocol& protocol = {});

/// Wedge used for the side check of a non-hyperbolic axis equilibrium, if
/// any: G2 / G2-mirror when d12 > 0, G1 / G1-mirror when d12 < 0.
[[nodiscard]] std::optional<RegionKind> side_wedge(const SystemParams& params, const Equilibrium& eq);

/// The empirical verdict a correct analytic class should produce.
[[nodiscard]] EmpiricalVerdict expected_empirical(const StabilityClass& cls);

struct OracleComparison {
    EquilibriumKind kind = EquilibriumKind::Origin;
    RationalPoint point = RationalPoint::Zero();
    ProbeScope scope = ProbeScope::FirstQuadrant;
    StabilityClass analytic;
    EmpiricalVerdict expected = EmpiricalVerdict::Inconclusive;
    EmpiricalReport empirical;

    [[nodiscard]] bool inconclusive() const { return empirical.verdict == EmpiricalVerdict::Inconclusive; }
    [[nodiscard]] bool agrees() const { return empirical.verdict == expected; }
};

/// Runs the oracle at both scopes for every classified equilibrium,
/// including a representative line member.
[[nodiscard]] std::vector<OracleComparison> compare_with_classifier(const SystemParams& params,
                                                                    ProbeProtocol protocol = {});

}  // namespace lvcomp
