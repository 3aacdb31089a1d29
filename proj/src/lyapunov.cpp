#include "lvcomp/lyapunov.hpp"

#include "lvcomp/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace lvcomp {

const char* to_string(LyapunovTarget t) {
    return t == LyapunovTarget::ForE2 ? "for-E2" : "for-E1";
}

LyapunovFunction::LyapunovFunction(const SystemParams& params, LyapunovTarget target)
    : c_(params.as<double>()), target_(target) {
    const DeterminantTriple d = compute_determinants(params);
    if (target == LyapunovTarget::ForE2) {
        if (d.d122.sign() != 0) throw NotApplicable("V for E2 needs d122 = 0, got " + to_string(d.d122));
        exponents_ << c_.a22, -c_.a12;
    } else {
        if (d.d112.sign() != 0) throw NotApplicable("V for E1 needs d112 = 0, got " + to_string(d.d112));
        exponents_ << -c_.a21, c_.a11;
    }
    d12_ = to_double(d.d12);
}

double LyapunovFunction::log_value(const Eigen::Vector2d& x) const {
    return exponents_(0) * std::log(x(0)) + exponents_(1) * std::log(x(1));
}

double LyapunovFunction::value(const Eigen::Vector2d& x) const { return std::exp(log_value(x)); }

double LyapunovFunction::log_rate_chain_rule(const Eigen::Vector2d& x) const {
    const Eigen::Vector2d f = vector_field(c_, x);
    return exponents_(0) * f(0) / x(0) + exponents_(1) * f(1) / x(1);
}

double LyapunovFunction::log_rate_closed_form(const Eigen::Vector2d& x) const {
    return target_ == LyapunovTarget::ForE2 ? -d12_ * x(0) : -d12_ * x(1);
}

double LyapunovFunction::derivative(const Eigen::Vector2d& x) const {
    return value(x) * log_rate_closed_form(x);
}

namespace {

double radical_inverse(std::size_t index, unsigned base) {
    double result = 0.0;
    double fraction = 1.0 / base;
    while (index > 0) {
        result += static_cast<double>(index % base) * fraction;
        index /= base;
        fraction /= base;
    }
    return result;
}

}  // namespace

LyapunovCheck lyapunov_verify(const SystemParams& params, LyapunovTarget target, std::size_t sample_count,
                              const SampleBox& box, double rel_tol) {
    if (!(box.x1_min > 0.0) || !(box.x2_min > 0.0) || box.x1_max <= box.x1_min || box.x2_max <= box.x2_min) {
        throw std::invalid_argument("sample box must lie in the open quadrant and be nonempty");
    }
    const LyapunovFunction v(params, target);
    const Sign expected = negate(sign_of(compute_determinants(params).d12));

    LyapunovCheck check;
    check.target = target;
    check.exponents = v.exponents();
    check.chain_rule_ok = check.sign_ok = check.positivity_ok = true;
    check.samples.reserve(sample_count);

    for (std::size_t i = 1; i <= sample_count; ++i) {
        LyapunovSample s;
        s.x << box.x1_min + (box.x1_max - box.x1_min) * radical_inverse(i, 2),
            box.x2_min + (box.x2_max - box.x2_min) * radical_inverse(i, 3);
        s.chain_rule = v.log_rate_chain_rule(s.x);
        s.closed_form = v.log_rate_closed_form(s.x);
        s.relative_error = std::abs(s.chain_rule - s.closed_form) / std::max(std::abs(s.closed_form), 1e-300);
        // V' = V * (log-rate) and V > 0, so the signs agree.
        const double vdot = v.value(s.x) * s.closed_form;
        const Sign got = vdot > 0 ? Sign::Pos : (vdot < 0 ? Sign::Neg : Sign::Zero);
        s.derivative_sign_ok = got == expected;
        s.positive = v.value(s.x) > 0.0 && std::isfinite(v.log_value(s.x));

        check.max_relative_error = std::max(check.max_relative_error, s.relative_error);
        check.chain_rule_ok &= s.relative_error <= rel_tol;
        check.sign_ok &= s.derivative_sign_ok;
        check.positivity_ok &= s.positive;
        check.samples.push_back(s);
    }
    return check;
}

MonotonicityResult lyapunov_monotone_along(const SystemParams& params, LyapunovTarget target,
                                           const Eigen::Vector2d& start, double horizon, double slack) {
    const LyapunovFunction v(params, target);
    IntegratorOptions opts;
    opts.detect_convergence = false;
    const Trajectory traj = integrate(params, start, horizon, opts);

    MonotonicityResult r;
    r.samples = traj.samples.size();
    r.max_log_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const double rise = v.log_value(traj.samples[i].x) - v.log_value(traj.samples[i - 1].x);
        r.max_log_increase = std::max(r.max_log_increase, rise);
    }
    r.non_increasing = r.samples >= 2 && r.max_log_increase <= slack;
    return r;
}

}  // namespace lvcomp
