// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all nine pass.

#include "support.hpp"

#include "lvcomp/bifurcation.hpp"
#include "lvcomp/dynamics.hpp"
#include "lvcomp/lyapunov.hpp"
#include "lvcomp/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace lvcomp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

// 1. Published rows for the nine figure sets, under one second.
Outcome reference_rows() {
    const auto t0 = Clock::now();
    Outcome o;
    int matched = 0;
    for (const auto& row : lvtest::serial_rows()) {
        const ClassificationReport r = classify(*reference_params(row.figure));
        const lvtest::ObservedRow got = lvtest::observe(r);
        const bool ok = to_string(r.sign_case.triple) == row.triple && r.sign_case.table6_serial == row.serial &&
                        got.e0 == row.e0 && got.e1 == row.e1 && got.e2 == row.e2 && got.e12 == row.e12 &&
                        got.line == row.line;
        if (ok) {
            ++matched;
        } else {
            o.pass = false;
            o.detail += std::string(" mismatch at ") + row.figure + ";";
        }
    }
    const double t = seconds_since(t0);
    if (t >= 1.0) o.pass = false;
    o.detail = std::to_string(matched) + "/9 rows exact, " + fmt(t) + " s (limit 1 s)" + o.detail;
    return o;
}

// Forces the chosen determinants to zero by solving for dependent
// coefficients; d112 and d122 together can only be met with d12 = 0 too.
std::array<Rational, 6> impose_zeros(std::array<Rational, 6> c, unsigned mask) {
    Rational &b1 = c[0], &b2 = c[1], &a11 = c[2], &a12 = c[3], &a21 = c[4], &a22 = c[5];
    const bool z12 = mask & 1u, z112 = mask & 2u, z122 = mask & 4u;
    if (z112 && z122) {
        b2 = b1 * a21 / a11;
        a22 = b2 * a12 / b1;
        return c;
    }
    if (z12) a22 = a12 * a21 / a11;
    if (z112) b2 = b1 * a21 / a11;
    if (z122) b1 = b2 * a12 / a22;
    return c;
}

// 2. No random draw lands on a triple the identities rule out.
Outcome impossibility_suite() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    const std::size_t draws = 1000000;
    std::size_t infeasible = 0, library_disagrees = 0, zero_hits = 0;
    std::set<SignTriple> seen;
    for (std::size_t i = 0; i < draws; ++i) {
        std::array<Rational, 6> c;
        for (auto& v : c) v = lvtest::random_positive(rng, 6);
        if (i % 2 == 1) c = impose_zeros(c, static_cast<unsigned>(1 + rng() % 7));
        const SystemParams p(c[0], c[1], c[2], c[3], c[4], c[5]);
        const SignTriple t = compute_determinants(p).signs();
        seen.insert(t);
        if (t.d12 == Sign::Zero || t.d112 == Sign::Zero || t.d122 == Sign::Zero) ++zero_hits;
        if (!lvtest::identity_feasible(t)) ++infeasible;
        if (!sign_case(t).feasible) ++library_disagrees;
    }
    const double t = seconds_since(t0);
    Outcome o;
    o.pass = infeasible == 0 && library_disagrees == 0 && t < 60.0;
    o.detail = std::to_string(draws) + " draws (" + std::to_string(zero_hits) + " with a zero determinant), " +
               std::to_string(infeasible) + " impossible triples, " + std::to_string(seen.size()) +
               " distinct triples, " + fmt(t) + " s (limit 60 s)";
    return o;
}

// 3. Exhaustive integer grid realizes exactly thirteen triples.
Outcome census() {
    std::set<SignTriple> seen;
    const int n = 5;
    for (int b1 = 1; b1 <= n; ++b1)
        for (int b2 = 1; b2 <= n; ++b2)
            for (int a11 = 1; a11 <= n; ++a11)
                for (int a12 = 1; a12 <= n; ++a12)
                    for (int a21 = 1; a21 <= n; ++a21)
                        for (int a22 = 1; a22 <= n; ++a22) {
                            const lvtest::IntParams ip{b1, b2, a11, a12, a21, a22};
                            const SignTriple t = ip.signs();
                            seen.insert(t);
                        }
    Outcome o;
    int mapped = 0;
    for (const auto& t : seen) {
        const SignCase sc = sign_case(t);
        const auto merged = lvtest::merged_triples().find(to_string(t));
        bool ok = sc.feasible && sc.table6_serial.has_value();
        if (ok && merged != lvtest::merged_triples().end()) ok = *sc.table6_serial == merged->second;
        if (ok && merged == lvtest::merged_triples().end()) {
            ok = to_string(t) == lvtest::serial_rows()[*sc.table6_serial - 1].triple;
        }
        mapped += ok ? 1 : 0;
    }
    o.pass = seen.size() == 13 && mapped == 13;
    o.detail = std::to_string(seen.size()) + " triples realized on the 1.." + std::to_string(n) +
               " grid, " + std::to_string(mapped) + " mapped to their serial";
    return o;
}

// 4. Exact interior determinant and trace; eigenvalues against a numeric solve.
Outcome eigen_identities() {
    std::mt19937_64 rng(4);
    const int draws = 10000;
    int exact_fail = 0;
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        const SystemParams p = lvtest::random_with_interior(rng);
        const DeterminantTriple d = compute_determinants(p);
        const EquilibriumSet eqs = find_equilibria(p);
        const Equilibrium* e = eqs.find(EquilibriumKind::Interior);
        if (e == nullptr) {
            ++exact_fail;
            continue;
        }
        const RationalPoint& x = e->point;
        const Matrix2<Rational> j = jacobian_at(p, x);
        if (j.determinant() != x(0) * x(1) * d.d12 || j.trace() != -(p.a11() * x(0) + p.a22() * x(1))) ++exact_fail;

        const Eigen::Matrix2d jd = j.unaryExpr([](const Rational& v) { return to_double(v); });
        Eigen::EigenSolver<Eigen::Matrix2d> solver(jd);
        std::array<std::complex<double>, 2> numeric{solver.eigenvalues()(0), solver.eigenvalues()(1)};
        std::array<std::complex<double>, 2> closed{e->eigenvalues.lambda1.to_complex(), e->eigenvalues.lambda2.to_complex()};
        auto order = [](const std::complex<double>& a, const std::complex<double>& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        };
        std::sort(numeric.begin(), numeric.end(), order);
        std::sort(closed.begin(), closed.end(), order);
        for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(numeric[k] - closed[k]) / std::abs(closed[k]));
    }
    Outcome o;
    o.pass = exact_fail == 0 && worst <= 1e-10;
    o.detail = std::to_string(draws) + " interior draws, " + std::to_string(exact_fail) +
               " exact identity failures, worst eigenvalue relative error " + fmt(worst) + " (limit 1e-10)";
    return o;
}

// 5. Theorem predicates never disagree with the classifier.
Outcome theorem_consistency() {
    std::mt19937_64 rng(5);
    std::size_t disagreements = 0, sets = 0;
    for (const char* label : reference_labels()) {
        disagreements += cross_check_theorems(*reference_params(label)).size();
        ++sets;
    }
    for (int i = 0; i < 10000; ++i) {
        disagreements += cross_check_theorems(lvtest::random_feasible(rng)).size();
        ++sets;
    }
    Outcome o;
    o.pass = disagreements == 0;
    o.detail = std::to_string(sets) + " parameter sets, " + std::to_string(disagreements) + " disagreements";
    return o;
}

// 6. Numerical probes agree with every analytic verdict on the figure sets.
Outcome oracle_agreement() {
    const auto t0 = Clock::now();
    std::size_t total = 0, agree = 0;
    bool two_sided = true;
    for (const char* label : reference_labels()) {
        const SystemParams p = *reference_params(label);
        for (const auto& c : compare_with_classifier(p)) {
            ++total;
            agree += c.agrees() ? 1 : 0;
        }
    }
    ProbeProtocol plane;
    plane.scope = ProbeScope::FullPlane;
    for (const auto& [label, kind] : {std::pair{"3a", EquilibriumKind::Axis2}, std::pair{"4a", EquilibriumKind::Axis1}}) {
        const SystemParams p = *reference_params(label);
        const EquilibriumSet eqs = find_equilibria(p);
        const Equilibrium* e = eqs.find(kind);
        const EmpiricalReport r = empirical_stability(p, *e, plane);
        int wedge = 0;
        for (const auto& probe : r.probes) {
            if (probe.wedge) {
                ++wedge;
                two_sided = two_sided && probe.outcome == ProbeOutcome::Escaped;
            } else if (probe.starts_in_quadrant) {
                two_sided = two_sided && probe.outcome == ProbeOutcome::Converged && probe.final_distance <= 1e-6;
            }
        }
        two_sided = two_sided && wedge > 0 && r.verdict == EmpiricalVerdict::Mixed;
    }
    const double t = seconds_since(t0);
    Outcome o;
    o.pass = agree == total && two_sided && t < 120.0;
    o.detail = std::to_string(agree) + "/" + std::to_string(total) + " equilibrium-scope pairs agree, semi-stable " +
               (two_sided ? "two-sided" : "NOT two-sided") + " for 3a and 4a, " + fmt(t) + " s (limit 120 s)";
    return o;
}

// 7. Lyapunov monomials for the two semi-stable cases.
Outcome lyapunov() {
    Outcome o;
    double worst = 0.0, worst_rise = -1e300;
    int monotone = 0, runs = 0;
    for (const auto& [label, target] : {std::pair{"3a", LyapunovTarget::ForE2}, std::pair{"4a", LyapunovTarget::ForE1}}) {
        const SystemParams p = *reference_params(label);
        const LyapunovCheck c = lyapunov_verify(p, target, 1000, {}, 1e-8);
        worst = std::max(worst, c.max_relative_error);
        if (!c.passed()) o.pass = false;
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> coord(0.1, 5.0);
        for (int k = 0; k < 10; ++k) {
            const MonotonicityResult m =
                lyapunov_monotone_along(p, target, Eigen::Vector2d(coord(rng), coord(rng)), 50.0, 1e-10);
            ++runs;
            monotone += m.non_increasing ? 1 : 0;
            worst_rise = std::max(worst_rise, m.max_log_increase);
        }
    }
    if (monotone != runs) o.pass = false;
    o.detail = "2x1000 samples, worst chain-rule relative error " + fmt(worst) + " (limit 1e-8), " +
               std::to_string(monotone) + "/" + std::to_string(runs) +
               " trajectories non-increasing, largest log V step " + fmt(worst_rise) + " (slack 1e-10)";
    return o;
}

// 8. Each catalog witness yields exactly one transcritical exchange.
Outcome catalog() {
    Outcome o;
    int good = 0;
    const auto cases = four_case_catalog();
    for (const auto& c : cases) {
        const ScanResult r = scan_path(c.witness);
        int transcritical = 0;
        bool ok = true;
        for (const auto& ev : r.events) {
            if (ev.kind != EventKind::Transcritical) continue;
            ++transcritical;
            ok = ok && ev.collision_verified && ev.which == c.crossing && ev.colliding_axis == c.axis &&
                 ev.before.axis_coarse() == ev.after.interior_coarse() &&
                 ev.before.interior_coarse() == ev.after.axis_coarse() &&
                 ev.before.axis_coarse() != ev.after.axis_coarse() && ev.before.origin_class == ev.after.origin_class;
        }
        if (ok && transcritical == 1) {
            ++good;
        } else {
            o.detail += " " + c.name + " failed;";
        }
    }
    o.pass = good == 4 && cases.size() == 4;
    o.detail = std::to_string(good) + "/4 witness paths with one verified transcritical swap" + o.detail;
    return o;
}

// 9. Trajectories from nonnegative starts stay nonnegative.
Outcome quadrant_invariance() {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    double lowest = 0.0;
    std::size_t steps = 0;
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = lvtest::random_feasible(rng);
        for (int k = 0; k < 3; ++k) {
            Eigen::Vector2d x0(coord(rng), coord(rng));
            if (k == 1) x0(rng() % 2) = 0.0;  // one start on an axis
            IntegratorOptions opts;
            opts.detect_convergence = false;
            opts.sample_stride = 0;
            (void)integrate(p, x0, 50.0, opts, [&](double, const Eigen::Vector2d& x) {
                lowest = std::min({lowest, x(0), x(1)});
                ++steps;
                return false;
            });
        }
    }
    Outcome o;
    o.pass = lowest >= -1e-9;
    o.detail = "3000 trajectories, " + std::to_string(steps) + " steps, lowest coordinate " + fmt(lowest) +
               " (limit -1e-9)";
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"reference table reproduction", reference_rows},
        {"impossible sign triples never drawn", impossibility_suite},
        {"thirteen-case census", census},
        {"interior eigenvalue identities", eigen_identities},
        {"theorem consistency", theorem_consistency},
        {"oracle agreement", oracle_agreement},
        {"Lyapunov verification", lyapunov},
        {"bifurcation catalog", catalog},
        {"quadrant invariance", quadrant_invariance},
    };
    int failures = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): " << o.detail
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
