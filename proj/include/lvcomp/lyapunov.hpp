#pragma once

#include "lvcomp/model.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lvcomp {

/// ForE2: V = x1^a22 * x2^-a12, certifies E2 when d122 = 0.
/// ForE1: V = x1^-a21 * x2^a11, certifies E1 when d112 = 0.
enum class LyapunovTarget { ForE2, ForE1 };

[[nodiscard]] const char* to_string(LyapunovTarget t);

class NotApplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Monomial V = x1^e1 * x2^e2, evaluated in log space. Valid for x1, x2 > 0.
class LyapunovFunction {
public:
    /// Throws NotApplicable unless the matching minor vanishes.
    LyapunovFunction(const SystemParams& params, LyapunovTarget target);

    [[nodiscard]] LyapunovTarget target() const { return target_; }
    [[nodiscard]] Eigen::Vector2d exponents() const { return exponents_; }

    [[nodiscard]] double log_value(const Eigen::Vector2d& x) const;
    [[nodiscard]] double value(const Eigen::Vector2d& x) const;

    /// dV/dt / V along the flow via the gradient: e1 f1/x1 + e2 f2/x2.
    [[nodiscard]] double log_rate_chain_rule(const Eigen::Vector2d& x) const;
    /// Closed form of the same quantity: -d12 x1 (ForE2) or -d12 x2 (ForE1).
    [[nodiscard]] double log_rate_closed_form(const Eigen::Vector2d& x) const;

    /// dV/dt itself, closed form.
    [[nodiscard]] double derivative(const Eigen::Vector2d& x) const;

private:
    Coefficients<double> c_;
    LyapunovTarget target_;
    Eigen::Vector2d exponents_;
    double d12_;
};

struct LyapunovSample {
    Eigen::Vector2d x;
    double chain_rule = 0.0;
    double closed_form = 0.0;
    /// |chain - closed| / max(|closed|, tiny).
    double relative_error = 0.0;
    bool derivative_sign_ok = false;
    bool positive = false;
};

struct LyapunovCheck {
    LyapunovTarget target = LyapunovTarget::ForE2;
    Eigen::Vector2d exponents = Eigen::Vector2d::Zero();
    std::vector<LyapunovSample> samples;
    double max_relative_error = 0.0;
    bool chain_rule_ok = false;
    bool sign_ok = false;
    bool positivity_ok = false;

    [[nodiscard]] bool passed() const { return chain_rule_ok && sign_ok && positivity_ok; }
};

struct SampleBox {
    double x1_min = 0.1, x1_max = 5.0;
    double x2_min = 0.1, x2_max = 5.0;
};

/// Halton points (bases 2 and 3) in the box. Requires both lower bounds > 0.
/// Checks chain rule against closed form to rel_tol, sign(V') = -sign(d12)
/// and V > 0 at every sample.
[[nodiscard]] LyapunovCheck lyapunov_verify(const SystemParams& params, LyapunovTarget target,
                                            std::size_t sample_count, const SampleBox& box = {},
                                            double rel_tol = 1e-8);

struct MonotonicityResult {
    std::size_t samples = 0;
    /// Largest increase of log V between consecutive samples (negative when
    /// strictly decreasing throughout).
    double max_log_increase = 0.0;
    bool non_increasing = false;
};

/// Integrates from the start and checks log V never rises by more than slack
/// between consecutive samples.
[[nodiscard]] MonotonicityResult lyapunov_monotone_along(const SystemParams& params, LyapunovTarget target,
                                                         const Eigen::Vector2d& start, double horizon,
                                                         double slack = 1e-10);

}  // namespace lvcomp
