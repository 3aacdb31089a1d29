#include "lvcomp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lvcomp {

const char* to_string(Termination t) {
    switch (t) {
        case Termination::ReachedHorizon: return "reached-horizon";
        case Termination::ConvergedToPoint: return "converged-to-point";
        case Termination::LeftDomain: return "left-domain";
        case Termination::StepFailure: return "step-failure";
        case Termination::Stopped: return "stopped";
    }
    return "?";
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 10.0;
constexpr double kBeta = 0.04;
constexpr double kAlpha = 0.2 - 0.75 * kBeta;

struct Stepper {
    Coefficients<double> c;

    Eigen::Vector2d f(const Eigen::Vector2d& x) const { return vector_field(c, x); }

    // One step from (x, k1); fills the 5th-order solution, its derivative
    // (FSAL) and the embedded error vector.
    void step(const Eigen::Vector2d& x, const Eigen::Vector2d& k1, double h, Eigen::Vector2d& x_new,
              Eigen::Vector2d& k7, Eigen::Vector2d& err) const {
        const Eigen::Vector2d k2 = f(x + h * (a21 * k1));
        const Eigen::Vector2d k3 = f(x + h * (a31 * k1 + a32 * k2));
        const Eigen::Vector2d k4 = f(x + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Eigen::Vector2d k5 = f(x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Eigen::Vector2d k6 = f(x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        x_new = x + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        k7 = f(x_new);
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    }
};

double error_norm(const Eigen::Vector2d& err, const Eigen::Vector2d& x, const Eigen::Vector2d& x_new,
                  const IntegratorOptions& o) {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double scale = o.abs_tol + o.rel_tol * std::max(std::abs(x(i)), std::abs(x_new(i)));
        const double e = err(i) / scale;
        sum += e * e;
    }
    return std::sqrt(sum / 2.0);
}

double scaled_norm(const Eigen::Vector2d& v, const Eigen::Vector2d& x, const IntegratorOptions& o) {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double e = v(i) / (o.abs_tol + o.rel_tol * std::abs(x(i)));
        sum += e * e;
    }
    return std::sqrt(sum / 2.0);
}

double initial_step(const Stepper& s, const Eigen::Vector2d& x, const Eigen::Vector2d& f0,
                    const IntegratorOptions& o) {
    const double d0 = scaled_norm(x, x, o);
    const double d1 = scaled_norm(f0, x, o);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    const Eigen::Vector2d f1 = s.f(x + h0 * f0);
    const double d2 = scaled_norm(f1 - f0, x, o) / h0;
    const double dmax = std::max(d1, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 1.0 / 5.0);
    return std::min(100.0 * h0, h1);
}

}  // namespace

Trajectory integrate(const SystemParams& params, const Eigen::Vector2d& initial, double horizon,
                     const IntegratorOptions& o, const StepObserver& observer) {
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    if (!(o.rel_tol > 0.0) || !(o.abs_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
    if (o.fixed_step && !(*o.fixed_step > 0.0)) throw std::invalid_argument("fixed step must be positive");

    const Stepper stepper{params.as<double>()};
    Trajectory traj;
    traj.samples.push_back({0.0, initial});

    double t = 0.0;
    Eigen::Vector2d x = initial;
    Eigen::Vector2d k1 = stepper.f(x);

    auto finish = [&](Termination status) {
        traj.status = status;
        traj.final_state = x;
        traj.final_time = t;
        if (traj.samples.back().t != t) traj.samples.push_back({t, x});
        return traj;
    };

    if (k1(0) == 0.0 && k1(1) == 0.0) {
        traj.converged_point = x;
        traj.tolerance = 0.0;
        return finish(Termination::ConvergedToPoint);
    }

    const double min_step = o.min_step_fraction * horizon;
    double h = o.fixed_step ? *o.fixed_step : (o.initial_step > 0.0 ? o.initial_step : initial_step(stepper, x, k1, o));
    h = std::min({h, o.max_step, horizon});
    double err_prev = 1e-4;
    bool last_rejected = false;

    double anchor_t = 0.0;
    Eigen::Vector2d anchor_x = x;
    bool anchored = false;

    Eigen::Vector2d x_new, k7, err;
    while (t < horizon) {
        const bool final_step = t + h >= horizon;
        const double step = final_step ? horizon - t : h;
        stepper.step(x, k1, step, x_new, k7, err);

        if (!o.fixed_step) {
            const double en = error_norm(err, x, x_new, o);
            if (!std::isfinite(en) || en > 1.0) {
                ++traj.rejected_steps;
                const double fac = std::isfinite(en) ? std::max(kFacMin, kSafety * std::pow(en, -kAlpha)) : kFacMin;
                h = step * std::min(1.0, fac);
                last_rejected = true;
                if (h < min_step) return finish(Termination::StepFailure);
                continue;
            }
            double fac = kSafety * std::pow(std::max(en, 1e-10), -kAlpha) * std::pow(err_prev, kBeta);
            fac = std::clamp(fac, kFacMin, last_rejected ? 1.0 : kFacMax);
            err_prev = std::max(en, 1e-4);
            last_rejected = false;
            h = std::min(step * fac, o.max_step);
            if (final_step) h = std::max(h, step);
        }

        t = final_step ? horizon : t + step;
        x = x_new;
        k1 = k7;
        ++traj.accepted_steps;

        if (!x.allFinite()) return finish(Termination::StepFailure);
        if (o.sample_stride > 0 && traj.accepted_steps % o.sample_stride == 0) traj.samples.push_back({t, x});

        if (x.norm() > o.escape_bound) {
            traj.tolerance = o.escape_bound;
            return finish(Termination::LeftDomain);
        }
        if (observer && observer(t, x)) return finish(Termination::Stopped);

        if (o.detect_convergence) {
            if (k1.norm() < o.conv_tol) {
                if (!anchored) {
                    anchored = true;
                    anchor_t = t;
                    anchor_x = x;
                } else if (t - anchor_t >= o.conv_window) {
                    if ((x - anchor_x).norm() < o.conv_tol) {
                        traj.converged_point = x;
                        traj.tolerance = o.conv_tol;
                        return finish(Termination::ConvergedToPoint);
                    }
                    anchor_t = t;
                    anchor_x = x;
                }
            } else {
                anchored = false;
            }
        }
        if (!o.fixed_step && h < min_step && t < horizon) return finish(Termination::StepFailure);
    }
    return finish(Termination::ReachedHorizon);
}

}  // namespace lvcomp
