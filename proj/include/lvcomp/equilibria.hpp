#pragma once

#include "lvcomp/model.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace lvcomp {

enum class EquilibriumKind { Origin, Axis1, Axis2, Interior, LineMember };

[[nodiscard]] const char* to_string(EquilibriumKind kind);

/// Exact real or complex number of the form (p + branch * sqrt(q)) / r with
/// rational p, q and r > 0. Perfect-square q is folded away, so q == 0 means
/// the value is rational and equal to p / r.
struct SurdValue {
    Rational p;
    Rational q;
    Rational r{1};
    int branch = 1;

    [[nodiscard]] static SurdValue rational(Rational value);

    [[nodiscard]] bool is_rational() const { return q.sign() == 0; }
    [[nodiscard]] bool is_real() const { return q.sign() >= 0; }
    /// Sign of the real part, computed without rounding.
    [[nodiscard]] Sign real_part_sign() const;
    /// Rounded value; the smaller root of a near-cancelling pair is evaluated
    /// through the conjugate to keep full relative precision.
    [[nodiscard]] std::complex<double> to_complex() const;

    friend bool operator==(const SurdValue&, const SurdValue&) = default;
};

struct EigenPair {
    SurdValue lambda1;
    SurdValue lambda2;

    [[nodiscard]] std::array<Sign, 2> realpart_signs() const {
        return {lambda1.real_part_sign(), lambda2.real_part_sign()};
    }
    [[nodiscard]] bool hyperbolic() const {
        const auto s = realpart_signs();
        return s[0] != Sign::Zero && s[1] != Sign::Zero;
    }
};

/// Both roots of lambda^2 + linear * lambda + constant.
[[nodiscard]] EigenPair monic_quadratic_roots(const Rational& linear, const Rational& constant);

struct Equilibrium {
    EquilibriumKind kind = EquilibriumKind::Origin;
    RationalPoint point = RationalPoint::Zero();
    EigenPair eigenvalues;
    /// Set on an axis equilibrium when the interior solution merges with it,
    /// and on the axis equilibria of a line of equilibria (LineMember).
    std::optional<EquilibriumKind> coincides_with;
    /// Line parameter for LineMember points.
    std::optional<Rational> alpha;

    [[nodiscard]] bool in_closed_quadrant() const { return point(0).sign() >= 0 && point(1).sign() >= 0; }
    [[nodiscard]] bool in_open_quadrant() const { return point(0).sign() > 0 && point(1).sign() > 0; }
};

/// E^alpha = ((b1 - a12 alpha) / a11, alpha) for alpha in [0, b1 / a12].
/// Exists only when all three determinants vanish.
struct EquilibriumLine {
    Rational alpha_min;
    Rational alpha_max;

    [[nodiscard]] RationalPoint at(const SystemParams& params, const Rational& alpha) const;
    [[nodiscard]] Equilibrium member(const SystemParams& params, const Rational& alpha) const;
};

struct EquilibriumSet {
    std::vector<Equilibrium> points;
    std::optional<EquilibriumLine> line;

    [[nodiscard]] const Equilibrium* find(EquilibriumKind kind) const;
};

/// Origin and both axis equilibria always; the interior point when it lies in
/// the open first quadrant, or when include_off_quadrant is set and d12 != 0.
/// A merged interior point is reported only through coincides_with.
[[nodiscard]] EquilibriumSet find_equilibria(const SystemParams& params, bool include_off_quadrant = false);

template <typename Scalar>
[[nodiscard]] Matrix2<Scalar> jacobian_at(const Coefficients<Scalar>& c, const Vector2<Scalar>& x) {
    Matrix2<Scalar> j;
    j(0, 0) = c.b1 - Scalar(2) * c.a11 * x(0) - c.a12 * x(1);
    j(0, 1) = -c.a12 * x(0);
    j(1, 0) = -c.a21 * x(1);
    j(1, 1) = c.b2 - c.a21 * x(0) - Scalar(2) * c.a22 * x(1);
    return j;
}

[[nodiscard]] inline Matrix2<Rational> jacobian_at(const SystemParams& params, const RationalPoint& x) {
    return jacobian_at(params.as<Rational>(), x);
}

/// Closed-form eigenvalues for an equilibrium returned by find_equilibria.
[[nodiscard]] EigenPair eigenvalues_of(const SystemParams& params, const Equilibrium& eq);

/// Both right-hand sides evaluated exactly.
[[nodiscard]] RationalPoint exact_rhs(const SystemParams& params, const RationalPoint& x);

}  // namespace lvcomp
