#pragma once

// Floating-point flow of the system: right-hand side and an adaptive
// Dormand-Prince 5(4) integrator with PI step control.

#include "lvcomp/model.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace lvcomp {

/// Right-hand side in factored form x_i * (...), so an exactly zero
/// coordinate produces an exactly zero derivative.
template <typename Scalar>
[[nodiscard]] Vector2<Scalar> vector_field(const Coefficients<Scalar>& c, const Vector2<Scalar>& x) {
    Vector2<Scalar> f;
    f(0) = x(0) * (c.b1 - c.a11 * x(0) - c.a12 * x(1));
    f(1) = x(1) * (c.b2 - c.a21 * x(0) - c.a22 * x(1));
    return f;
}

[[nodiscard]] inline Eigen::Vector2d vector_field(const SystemParams& params, const Eigen::Vector2d& x) {
    return vector_field(params.as<double>(), x);
}

struct IntegratorOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    /// Rest-point detection: |f(x)| below conv_tol and displacement over the
    /// trailing conv_window (time units) below conv_tol. Next to a stable
    /// node the step controller parks the fast mode on the stability
    /// boundary, leaving |f| near rel_tol, so this sits above it.
    double conv_tol = 1e-8;
    double conv_window = 1.0;
    bool detect_convergence = true;
    double escape_bound = 1e6;
    /// Minimum step as a fraction of the horizon.
    double min_step_fraction = 1e-14;
    double max_step = std::numeric_limits<double>::infinity();
    /// Zero selects the starting step automatically.
    double initial_step = 0.0;
    /// When set, takes uniform steps of this size with no error control.
    std::optional<double> fixed_step;
    /// Record every n-th accepted step; 0 keeps only the endpoints.
    std::size_t sample_stride = 1;
};

enum class Termination {
    ReachedHorizon,
    ConvergedToPoint,
    LeftDomain,
    StepFailure,
    /// The caller's step observer asked to stop.
    Stopped,
};

[[nodiscard]] const char* to_string(Termination t);

struct TrajectorySample {
    double t = 0.0;
    Eigen::Vector2d x = Eigen::Vector2d::Zero();
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    Termination status = Termination::ReachedHorizon;
    Eigen::Vector2d final_state = Eigen::Vector2d::Zero();
    double final_time = 0.0;
    /// Meaningful for ConvergedToPoint (point and tolerance) and LeftDomain
    /// (the bound that was crossed).
    Eigen::Vector2d converged_point = Eigen::Vector2d::Zero();
    double tolerance = 0.0;
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
};

/// Called after every accepted step; returning true stops the integration
/// with Termination::Stopped.
using StepObserver = std::function<bool(double t, const Eigen::Vector2d& x)>;

/// Throws std::invalid_argument for a nonpositive horizon or tolerance.
[[nodiscard]] Trajectory integrate(const SystemParams& params, const Eigen::Vector2d& initial, double horizon,
                                   const IntegratorOptions& options = {}, const StepObserver& observer = {});

}  // namespace lvcomp
