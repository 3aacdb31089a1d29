#include "lvcomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lvcomp {

const char* to_string(ProbeScope s) { return s == ProbeScope::FirstQuadrant ? "first-quadrant" : "full-plane"; }

const char* to_string(ProbeOutcome o) {
    switch (o) {
        case ProbeOutcome::Converged: return "converged";
        case ProbeOutcome::Escaped: return "escaped";
        case ProbeOutcome::Settled: return "settled";
        case ProbeOutcome::Undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(EmpiricalVerdict v) {
    switch (v) {
        case EmpiricalVerdict::Attracting: return "attracting";
        case EmpiricalVerdict::RepellingInSomeDirection: return "repelling-in-some-direction";
        case EmpiricalVerdict::Mixed: return "mixed";
        case EmpiricalVerdict::Neutral: return "neutral";
        case EmpiricalVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<RegionKind> side_wedge(const SystemParams& params, const Equilibrium& eq) {
    if (eq.coincides_with != EquilibriumKind::Interior) return std::nullopt;
    const Sign d12 = sign_of(compute_determinants(params).d12);
    if (eq.kind == EquilibriumKind::Axis2) return d12 == Sign::Pos ? RegionKind::G2 : RegionKind::G1;
    if (eq.kind == EquilibriumKind::Axis1) return d12 == Sign::Pos ? RegionKind::G2Mirror : RegionKind::G1Mirror;
    return std::nullopt;
}

EmpiricalVerdict expected_empirical(const StabilityClass& cls) {
    switch (cls.verdict) {
        case Verdict::StableNode:
        case Verdict::AsymptoticallyStable: return EmpiricalVerdict::Attracting;
        case Verdict::UnstableNode:
        case Verdict::Saddle:
        case Verdict::Unstable: return EmpiricalVerdict::RepellingInSomeDirection;
        case Verdict::SemiStable: return EmpiricalVerdict::Mixed;
        case Verdict::NonIsolated: return EmpiricalVerdict::Neutral;
    }
    return EmpiricalVerdict::Inconclusive;
}

namespace {

struct ProbeContext {
    const SystemParams& params;
    Eigen::Vector2d eq;
    double radius;
    double rest_tol;
    const ProbeProtocol& protocol;
};

ProbeResult run_probe(const ProbeContext& ctx, const Eigen::Vector2d& start) {
    const ProbeProtocol& p = ctx.protocol;
    const double escape_radius = p.escape_factor * ctx.radius;

    ProbeResult result;
    result.start = start;
    result.starts_in_quadrant = start(0) >= 0.0 && start(1) >= 0.0;

    bool converged = false;
    bool outside = false;
    double left_at = 0.0;

    IntegratorOptions opts;
    opts.conv_tol = ctx.rest_tol;
    opts.conv_window = p.rest_window;
    opts.sample_stride = 0;
    const double settle_radius = p.settle_factor * ctx.radius;
    const auto observer = [&](double t, const Eigen::Vector2d& x) {
        const double dist = (x - ctx.eq).norm();
        if (dist < p.convergence_radius) {
            converged = true;
            return true;
        }
        if (dist > escape_radius) {
            if (!outside) {
                outside = true;
                left_at = t;
            }
            // Clearly gone: stop early rather than run to the horizon.
            return dist > settle_radius && t - left_at >= p.escape_followup;
        }
        outside = false;
        return false;
    };

    const Trajectory traj = integrate(ctx.params, start, p.horizon, opts, observer);
    result.termination = traj.status;
    result.final_time = traj.final_time;
    result.final_state = traj.final_state;
    result.final_distance = (traj.final_state - ctx.eq).norm();
    const bool at_rest = traj.status == Termination::ConvergedToPoint;
    const bool far = result.final_distance > settle_radius;

    if (converged || result.final_distance < p.convergence_radius) {
        result.outcome = ProbeOutcome::Converged;
    } else if (!outside) {
        result.outcome = at_rest ? ProbeOutcome::Settled : ProbeOutcome::Undetermined;
    } else if (traj.status == Termination::Stopped || traj.status == Termination::LeftDomain || far) {
        // Out of the escape ball since it last left, and either diverging or
        // beyond the settle ball.
        result.outcome = ProbeOutcome::Escaped;
    } else {
        // Outside the escape ball but close: resting on a nearby member of a
        // continuum, or still drifting.
        result.outcome = at_rest ? ProbeOutcome::Settled : ProbeOutcome::Undetermined;
    }
    return result;
}

// Points inside the wedge at fractions of the way between its two boundaries
// on a cross-section beside the equilibrium, pulled back onto the probe
// circle. The wedge is a cone at the equilibrium, so rescaling keeps each
// point inside; the rounded result is still checked exactly.
std::vector<Eigen::Vector2d> wedge_points(const SystemParams& params, const Equilibrium& eq, RegionKind kind,
                                          double radius, int count) {
    std::vector<Eigen::Vector2d> points;
    const ProbeRegion region(params, kind);
    const bool positive_side = kind == RegionKind::G1 || kind == RegionKind::G1Mirror;
    const double offset = (positive_side ? 0.5 : -0.5) * radius;
    const Rational cross = from_double(offset);
    const auto [lo, hi] = region.bounds_at(cross);
    const double dlo = to_double(lo);
    const double dhi = to_double(hi);
    for (int i = 1; i <= count; ++i) {
        const double frac = static_cast<double>(i) / (count + 1);
        const double along = dlo + frac * (dhi - dlo);
        Eigen::Vector2d x;
        if (kind == RegionKind::G1 || kind == RegionKind::G2) {
            x << offset, along;
        } else {
            x << along, offset;
        }
        const Eigen::Vector2d centre(to_double(eq.point(0)), to_double(eq.point(1)));
        x = centre + (x - centre) * (radius / (x - centre).norm());
        RationalPoint exact;
        exact << from_double(x(0)), from_double(x(1));
        if (region.contains(exact)) points.push_back(x);
    }
    return points;
}

// A continuum through the equilibrium passes arbitrarily close to it, so a
// start ten times closer lands proportionally closer. Otherwise the rest point
// is either an isolated neighbour or a slow creep toward the equilibrium that
// passed the rest test; running on from it tells the two apart.
void recheck_settled(const ProbeContext& ctx, std::vector<ProbeResult>& probes) {
    for (auto& r : probes) {
        if (r.outcome != ProbeOutcome::Settled) continue;
        const ProbeResult inner = run_probe(ctx, ctx.eq + (r.start - ctx.eq) / 10.0);
        if (inner.final_distance < 0.5 * r.final_distance) continue;

        IntegratorOptions opts;
        opts.detect_convergence = false;
        opts.sample_stride = 0;
        const Trajectory onward = integrate(ctx.params, r.final_state, ctx.protocol.horizon, opts);
        const double d = (onward.final_state - ctx.eq).norm();
        if (d < ctx.protocol.convergence_radius) {
            r.outcome = ProbeOutcome::Converged;
        } else if (d < 0.5 * r.final_distance) {
            r.outcome = ProbeOutcome::Undetermined;
        } else {
            r.outcome = ProbeOutcome::Escaped;
        }
    }
}

bool admissible(const ProbeProtocol& p, const Eigen::Vector2d& start) {
    return p.scope == ProbeScope::FullPlane || (start(0) >= 0.0 && start(1) >= 0.0);
}

EmpiricalVerdict summarise(const ProbeProtocol& protocol, const std::vector<ProbeResult>& probes) {
    if (probes.empty()) return EmpiricalVerdict::Inconclusive;
    std::size_t converged = 0, escaped = 0, settled = 0, undetermined = 0;
    for (const auto& r : probes) {
        switch (r.outcome) {
            case ProbeOutcome::Converged: ++converged; break;
            case ProbeOutcome::Escaped: ++escaped; break;
            case ProbeOutcome::Settled: ++settled; break;
            case ProbeOutcome::Undetermined: ++undetermined; break;
        }
    }
    if (converged == probes.size()) return EmpiricalVerdict::Attracting;

    bool quadrant_escape = false;
    bool quadrant_returns = true;
    bool any_wedge = false;
    bool wedge_escapes = true;
    for (const auto& r : probes) {
        if (r.starts_in_quadrant) {
            quadrant_escape |= r.outcome == ProbeOutcome::Escaped;
            quadrant_returns &= r.outcome == ProbeOutcome::Converged;
        }
        if (r.wedge) {
            any_wedge = true;
            wedge_escapes &= r.outcome == ProbeOutcome::Escaped;
        }
    }
    if (quadrant_escape) return EmpiricalVerdict::RepellingInSomeDirection;
    if (escaped > 0) {
        // Only off-quadrant probes left. Without every quadrant probe back,
        // this is as consistent with one-sided attraction as with repulsion.
        if (!quadrant_returns) return EmpiricalVerdict::Inconclusive;
        if (protocol.scope == ProbeScope::FullPlane && any_wedge && wedge_escapes) return EmpiricalVerdict::Mixed;
        return EmpiricalVerdict::RepellingInSomeDirection;
    }
    if (undetermined == 0 && settled > 0) return EmpiricalVerdict::Neutral;
    return EmpiricalVerdict::Inconclusive;
}

}  // namespace

EmpiricalReport empirical_stability(const SystemParams& params, const Equilibrium& eq, const ProbeProtocol& protocol) {
    if (protocol.directions <= 0) throw std::invalid_argument("probe count must be positive");
    const Eigen::Vector2d center(to_double(eq.point(0)), to_double(eq.point(1)));
    const double scale = std::max(1.0, center.norm());

    EmpiricalReport report;
    report.radius = protocol.radius_factor * scale;
    const ProbeContext ctx{params, center, report.radius, protocol.rest_tolerance * scale, protocol};

    for (int k = 0; k < protocol.directions; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / protocol.directions;
        Eigen::Vector2d dir(std::cos(angle), std::sin(angle));
        for (int i = 0; i < 2; ++i) {
            if (std::abs(dir(i)) < 1e-12) dir(i) = 0.0;
        }
        Eigen::Vector2d start = center + report.radius * dir;
        // Keep exact axis coordinates exact so the probe stays on the axis.
        for (int i = 0; i < 2; ++i) {
            if (dir(i) == 0.0) start(i) = center(i);
        }
        if (!admissible(protocol, start)) continue;
        ProbeResult r = run_probe(ctx, start);
        r.angle = angle;
        report.probes.push_back(r);
    }

    if (const auto kind = side_wedge(params, eq); kind && protocol.wedge_probes > 0) {
        // The d12 > 0 wedge lies outside the quadrant and is probed only on
        // the plane.
        const bool off_quadrant = *kind == RegionKind::G2 || *kind == RegionKind::G2Mirror;
        if (!off_quadrant || protocol.scope == ProbeScope::FullPlane) {
            for (const auto& start : wedge_points(params, eq, *kind, report.radius, protocol.wedge_probes)) {
                if (!admissible(protocol, start)) continue;
                ProbeResult r = run_probe(ctx, start);
                r.wedge = kind;
                report.probes.push_back(r);
            }
        }
    }

    recheck_settled(ctx, report.probes);
    report.verdict = summarise(protocol, report.probes);
    return report;
}

std::vector<OracleComparison> compare_with_classifier(const SystemParams& params, ProbeProtocol protocol) {
    const ClassificationReport report = classify(params);
    std::vector<const EquilibriumVerdict*> targets;
    for (const auto& v : report.equilibria) targets.push_back(&v);
    if (report.line_member) targets.push_back(&*report.line_member);

    std::vector<OracleComparison> out;
    for (const ProbeScope scope : {ProbeScope::FirstQuadrant, ProbeScope::FullPlane}) {
        protocol.scope = scope;
        for (const auto* v : targets) {
            OracleComparison cmp;
            cmp.kind = v->equilibrium.kind;
            cmp.point = v->equilibrium.point;
            cmp.scope = scope;
            cmp.analytic = scope == ProbeScope::FirstQuadrant ? v->quadrant : v->full;
            cmp.expected = expected_empirical(cmp.analytic);
            cmp.empirical = empirical_stability(params, v->equilibrium, protocol);
            out.push_back(std::move(cmp));
        }
    }
    return out;
}

}  // namespace lvcomp
