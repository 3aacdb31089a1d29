#include "support.hpp"

#include "lvcomp/dynamics.hpp"
#include "lvcomp/lyapunov.hpp"
#include "lvcomp/nullclines.hpp"
#include "lvcomp/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lvcomp;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// Independent closed form for the logistic equation x' = x (b - a x).
double logistic(double b, double a, double x0, double t) {
    const double k = b / a;
    return k / (1.0 + (k / x0 - 1.0) * std::exp(-b * t));
}

}  // namespace

TEST(VectorField, KnownValues) {
    const SystemParams p = *reference_params("1a");
    EXPECT_EQ(vector_field(p, Eigen::Vector2d(2, 1)), Eigen::Vector2d(0, 0));
    EXPECT_EQ(vector_field(p, Eigen::Vector2d(1, 1)), Eigen::Vector2d(1, 1));
    const Eigen::Vector2d axis = vector_field(p, Eigen::Vector2d(0, 0.7));
    EXPECT_EQ(axis(0), 0.0);
}

TEST(VectorField, TemplatedScalarAgreesWithExactRhs) {
    const SystemParams p = *reference_params("2b");
    const RationalPoint x(q(3, 7), q(5, 3));
    EXPECT_EQ(vector_field(p.as<Rational>(), x), exact_rhs(p, x));
}

TEST(Integrator, StableInteriorIsReached) {
    const Trajectory t = integrate(*reference_params("1a"), Eigen::Vector2d(0.5, 3.0), 200.0);
    EXPECT_LT((t.final_state - Eigen::Vector2d(2, 1)).norm(), 1e-6);
    EXPECT_EQ(t.status, Termination::ConvergedToPoint);
}

TEST(Integrator, LineOfEquilibriaAbsorbsTrajectories) {
    const Trajectory t = integrate(*reference_params("5"), Eigen::Vector2d(0.2, 0.1), 500.0);
    const Eigen::Vector2d x = t.final_state;
    EXPECT_NEAR(x(1), (1.0 - x(0)) / 2.0, 1e-7);
    EXPECT_GT(x(0), 0.0);
}

TEST(Integrator, AxesAreInvariantExactly) {
    const SystemParams p = *reference_params("2a");
    const Trajectory t = integrate(p, Eigen::Vector2d(0.0, 0.3), 30.0);
    for (const auto& s : t.samples) EXPECT_EQ(s.x(0), 0.0);
    // On the axis the flow is logistic in x2 with b2 = 2, a22 = 1.
    EXPECT_NEAR(t.samples.back().x(1), logistic(2.0, 1.0, 0.3, t.samples.back().t), 1e-8);
}

TEST(Integrator, MatchesLogisticClosedForm) {
    const SystemParams p = *reference_params("3b");  // b1 = 2, a11 = 1
    IntegratorOptions opts;
    opts.detect_convergence = false;
    const Trajectory t = integrate(p, Eigen::Vector2d(0.05, 0.0), 6.0, opts);
    for (const auto& s : t.samples) EXPECT_NEAR(s.x(0), logistic(2.0, 1.0, 0.05, s.t), 1e-8);
}

TEST(Integrator, FixedStepOrderIsFive) {
    const SystemParams p = *reference_params("1a");
    const Eigen::Vector2d x0(0.5, 0.5);
    IntegratorOptions ref_opts;
    ref_opts.rel_tol = 1e-13;
    ref_opts.abs_tol = 1e-15;
    ref_opts.detect_convergence = false;
    const Eigen::Vector2d ref = integrate(p, x0, 1.0, ref_opts).final_state;
    auto err = [&](double h) {
        IntegratorOptions o;
        o.fixed_step = h;
        o.detect_convergence = false;
        return (integrate(p, x0, 1.0, o).final_state - ref).norm();
    };
    const double e1 = err(0.1), e2 = err(0.05);
    const double order = std::log2(e1 / e2);
    EXPECT_NEAR(order, 5.0, 0.5);
}

TEST(Integrator, StartAtRestReturnsSingleSample) {
    const Trajectory t = integrate(*reference_params("1a"), Eigen::Vector2d(0, 0), 10.0);
    EXPECT_EQ(t.status, Termination::ConvergedToPoint);
    EXPECT_EQ(t.final_state, Eigen::Vector2d(0, 0));
}

TEST(Integrator, ObserverCanStop) {
    int calls = 0;
    const Trajectory t = integrate(*reference_params("1a"), Eigen::Vector2d(1, 1), 100.0, {},
                                   [&](double, const Eigen::Vector2d&) { return ++calls == 5; });
    EXPECT_EQ(t.status, Termination::Stopped);
    EXPECT_EQ(calls, 5);
}

TEST(Integrator, RejectsBadArguments) {
    const SystemParams p = *reference_params("1a");
    EXPECT_THROW((void)integrate(p, Eigen::Vector2d(1, 1), 0.0), std::invalid_argument);
    IntegratorOptions o;
    o.rel_tol = -1;
    EXPECT_THROW((void)integrate(p, Eigen::Vector2d(1, 1), 1.0, o), std::invalid_argument);
}

TEST(Integrator, QuadrantInvarianceOnRandomDraws) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> start(0.0, 10.0);
    double lowest = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = lvtest::random_feasible(rng);
        IntegratorOptions o;
        o.detect_convergence = false;
        const Trajectory t = integrate(p, Eigen::Vector2d(start(rng), start(rng)), 50.0, o);
        for (const auto& s : t.samples) lowest = std::min({lowest, s.x(0), s.x(1)});
    }
    EXPECT_GE(lowest, -1e-9);
}

TEST(Nullclines, Figure3aObliqueX1NullclineFlowsUp) {
    const SystemParams p = *reference_params("3a");
    const NullclineSet ns = nullclines(p);
    EXPECT_EQ(direction_on(p, ns.x1_oblique, q(1)), FlowDirection::Up);
    EXPECT_EQ(direction_on(p, ns.x1_oblique, q(3, 2)), FlowDirection::Up);
    EXPECT_EQ(direction_on(p, ns.x1_oblique, q(0)), FlowDirection::Stationary);
    // On the x2 axis below its carrying capacity b2 / a22 = 2 the flow is up.
    EXPECT_EQ(direction_on(p, ns.x1_axis, q(1)), FlowDirection::Up);
    EXPECT_EQ(direction_on(p, ns.x1_axis, q(3)), FlowDirection::Down);
}

TEST(Nullclines, Figure3bObliqueX1NullclineFlowsDown) {
    const SystemParams p = *reference_params("3b");
    const NullclineSet ns = nullclines(p);
    EXPECT_EQ(direction_on(p, ns.x1_oblique, q(1)), FlowDirection::Down);
}

TEST(Nullclines, DirectionsMatchExactVectorField) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = lvtest::random_feasible(rng);
        const NullclineSet ns = nullclines(p);
        for (const Nullcline* c : {&ns.x1_axis, &ns.x1_oblique, &ns.x2_axis, &ns.x2_oblique}) {
            for (int k = 0; k < 5; ++k) {
                const Rational s = lvtest::random_positive(rng, 6);
                const RationalPoint x = c->point_at(s);
                const RationalPoint f = exact_rhs(p, x);
                const int comp = c->family == NullclineFamily::X1 ? 1 : 0;
                EXPECT_EQ(f(1 - comp).sign(), 0);
                const int sign = f(comp).sign();
                FlowDirection expect = FlowDirection::Stationary;
                if (comp == 1 && sign != 0) expect = sign > 0 ? FlowDirection::Up : FlowDirection::Down;
                if (comp == 0 && sign != 0) expect = sign > 0 ? FlowDirection::Right : FlowDirection::Left;
                EXPECT_EQ(direction_on(p, *c, s), expect);
            }
        }
    }
}

TEST(Nullclines, SegmentsAreConsistentWithPointwiseDirection) {
    const SystemParams p = *reference_params("2b");
    const NullclineSet ns = nullclines(p);
    for (const auto& seg : ns.x1_oblique.segments) {
        Rational mid;
        if (seg.from && seg.to) mid = (*seg.from + *seg.to) / 2;
        else if (seg.from) mid = *seg.from + 1;
        else if (seg.to) mid = *seg.to - 1;
        EXPECT_EQ(direction_on(p, ns.x1_oblique, mid), seg.direction);
    }
}

TEST(Regions, WedgeMembershipIsExact) {
    const SystemParams p = *reference_params("3a");
    const ProbeRegion g2(p, RegionKind::G2);
    // At x1 = -1: (4 + 1) / 2 = 5/2 < x2 < 3.
    EXPECT_TRUE(g2.contains(RationalPoint(q(-1), q(11, 4))));
    EXPECT_FALSE(g2.contains(RationalPoint(q(-1), q(5, 2))));
    EXPECT_FALSE(g2.contains(RationalPoint(q(1), q(3, 2))));
    const auto [lo, hi] = g2.bounds_at(q(-1));
    EXPECT_EQ(lo, q(5, 2));
    EXPECT_EQ(hi, q(3));
}

TEST(Lyapunov, Figure3aAndFigure4aCertified) {
    const LyapunovCheck c3 = lyapunov_verify(*reference_params("3a"), LyapunovTarget::ForE2, 500);
    EXPECT_TRUE(c3.passed());
    EXPECT_LT(c3.max_relative_error, 1e-8);
    EXPECT_EQ(c3.exponents, Eigen::Vector2d(2, -1));
    const LyapunovCheck c4 = lyapunov_verify(*reference_params("4a"), LyapunovTarget::ForE1, 500);
    EXPECT_TRUE(c4.passed());
}

TEST(Lyapunov, RequiresVanishingMinor) {
    EXPECT_THROW(LyapunovFunction(*reference_params("1a"), LyapunovTarget::ForE2), NotApplicable);
    EXPECT_THROW(LyapunovFunction(*reference_params("3a"), LyapunovTarget::ForE1), NotApplicable);
}

TEST(Lyapunov, ChainRuleMatchesFiniteDifferenceAlongFlow) {
    const SystemParams p = *reference_params("3a");
    const LyapunovFunction v(p, LyapunovTarget::ForE2);
    const Eigen::Vector2d x(1.3, 0.7);
    const double h = 1e-6;
    const Eigen::Vector2d f = vector_field(p, x);
    const double fd = (v.value(x + h * f) - v.value(x - h * f)) / (2 * h);
    EXPECT_NEAR(fd, v.derivative(x), 1e-6 * std::abs(v.derivative(x)));
}

TEST(Lyapunov, MonotoneAlongTrajectories) {
    for (const auto& [label, target] : {std::pair{"3a", LyapunovTarget::ForE2}, std::pair{"4a", LyapunovTarget::ForE1}}) {
        const MonotonicityResult m =
            lyapunov_monotone_along(*reference_params(label), target, Eigen::Vector2d(2.5, 0.4), 50.0);
        EXPECT_TRUE(m.non_increasing) << label << " " << m.max_log_increase;
        EXPECT_GT(m.samples, 10u);
    }
    // With d12 < 0 the same monomial grows, matching the unstable E2 of 3b.
    const MonotonicityResult grows =
        lyapunov_monotone_along(*reference_params("3b"), LyapunovTarget::ForE2, Eigen::Vector2d(0.5, 0.4), 20.0);
    EXPECT_FALSE(grows.non_increasing);
}

TEST(Oracle, AttractingInteriorOfFigure1a) {
    const SystemParams p = *reference_params("1a");
    const EquilibriumSet eqs = find_equilibria(p);
    const Equilibrium* e = eqs.find(EquilibriumKind::Interior);
    EXPECT_EQ(empirical_stability(p, *e).verdict, EmpiricalVerdict::Attracting);
}

TEST(Oracle, RepellingInteriorOfFigure2b) {
    const SystemParams p = *reference_params("2b");
    const EquilibriumSet eqs = find_equilibria(p);
    const Equilibrium* e = eqs.find(EquilibriumKind::Interior);
    EXPECT_EQ(empirical_stability(p, *e).verdict, EmpiricalVerdict::RepellingInSomeDirection);
}

TEST(Oracle, SemiStableE2OfFigure3aIsTwoSided) {
    const SystemParams p = *reference_params("3a");
    const EquilibriumSet eqs = find_equilibria(p);
    const Equilibrium* e = eqs.find(EquilibriumKind::Axis2);
    EXPECT_EQ(side_wedge(p, *e), RegionKind::G2);
    ProbeProtocol plane;
    plane.scope = ProbeScope::FullPlane;
    const EmpiricalReport r = empirical_stability(p, *e, plane);
    EXPECT_EQ(r.verdict, EmpiricalVerdict::Mixed);
    int wedge = 0;
    for (const auto& probe : r.probes) {
        if (probe.wedge) {
            ++wedge;
            EXPECT_EQ(probe.outcome, ProbeOutcome::Escaped);
        } else if (probe.starts_in_quadrant) {
            EXPECT_EQ(probe.outcome, ProbeOutcome::Converged);
        }
    }
    EXPECT_EQ(wedge, 3);
    EXPECT_EQ(empirical_stability(p, *e).verdict, EmpiricalVerdict::Attracting);
}

TEST(Oracle, SteepWedgeStillGetsProbes) {
    // d122 = 0 with boundary slopes -35/2 and -5/3: the cross-section points
    // sit far from E2 and must be pulled back onto the probe circle.
    const SystemParams p(q(1, 7), q(1), q(3, 2), q(3, 35), q(1), q(3, 5));
    const EquilibriumSet eqs = find_equilibria(p);
    const Equilibrium* e = eqs.find(EquilibriumKind::Axis2);
    ASSERT_EQ(side_wedge(p, *e), RegionKind::G2);
    ProbeProtocol plane;
    plane.scope = ProbeScope::FullPlane;
    const EmpiricalReport r = empirical_stability(p, *e, plane);
    EXPECT_EQ(r.verdict, EmpiricalVerdict::Mixed);
    int wedge = 0;
    for (const auto& probe : r.probes) {
        if (!probe.wedge) continue;
        ++wedge;
        EXPECT_NEAR((probe.start - Eigen::Vector2d(0.0, 5.0 / 3.0)).norm(), r.radius, 1e-12);
    }
    EXPECT_EQ(wedge, 3);
}

TEST(Oracle, NearbyNeighbourIsNotAContinuum) {
    // Saddle E1 = (2/5, 0) with the interior node within the settle ball.
    const SystemParams p(q(4, 5), q(3, 8), q(2), q(7, 5), q(1, 5), q(4));
    const EquilibriumSet eqs = find_equilibria(p);
    const Equilibrium* e = eqs.find(EquilibriumKind::Axis1);
    const EmpiricalReport r = empirical_stability(p, *e);
    EXPECT_EQ(r.verdict, EmpiricalVerdict::RepellingInSomeDirection);
    for (const auto& probe : r.probes) EXPECT_NE(probe.outcome, ProbeOutcome::Settled);
}

TEST(Oracle, ExpectedVerdicts) {
    EXPECT_EQ(expected_empirical({Verdict::SemiStable, Scope::FullNeighborhood, Basis::NullclineArgument}),
              EmpiricalVerdict::Mixed);
    EXPECT_EQ(expected_empirical({Verdict::StableNode}), EmpiricalVerdict::Attracting);
    EXPECT_EQ(expected_empirical({Verdict::Saddle}), EmpiricalVerdict::RepellingInSomeDirection);
    EXPECT_EQ(expected_empirical({Verdict::NonIsolated}), EmpiricalVerdict::Neutral);
}

TEST(Oracle, RandomDrawsNeverContradictClassifier) {
    // Short horizon: slow non-hyperbolic approaches may stay inconclusive, but
    // a conclusive probe summary must match the analytic verdict.
    std::mt19937_64 rng(47);
    ProbeProtocol proto;
    proto.horizon = 2e4;
    int conclusive = 0, total = 0;
    for (int i = 0; i < 500; ++i) {
        const SystemParams p = lvtest::random_feasible(rng);
        for (const auto& c : compare_with_classifier(p, proto)) {
            ++total;
            if (c.inconclusive()) continue;
            ++conclusive;
            EXPECT_TRUE(c.agrees()) << to_string(p.values()[0]) << " " << to_string(c.kind) << " "
                                    << to_string(c.scope) << " " << to_string(c.empirical.verdict);
        }
    }
    EXPECT_GT(conclusive, total / 2);
}
