#include "lvcomp/equilibria.hpp"

#include <cmath>

namespace lvcomp {

const char* to_string(EquilibriumKind kind) {
    switch (kind) {
        case EquilibriumKind::Origin: return "E0";
        case EquilibriumKind::Axis1: return "E1";
        case EquilibriumKind::Axis2: return "E2";
        case EquilibriumKind::Interior: return "E12";
        case EquilibriumKind::LineMember: return "Ealpha";
    }
    return "?";
}

SurdValue SurdValue::rational(Rational value) { return SurdValue{std::move(value), Rational(0), Rational(1), 1}; }

Sign SurdValue::real_part_sign() const {
    // r > 0 always, so only the numerator matters.
    if (q.sign() <= 0) return sign_of(p);
    const Rational p2 = p * p;
    if (branch > 0) {
        if (p.sign() >= 0) return Sign::Pos;
        return q > p2 ? Sign::Pos : (q == p2 ? Sign::Zero : Sign::Neg);
    }
    if (p.sign() <= 0) return Sign::Neg;
    return p2 > q ? Sign::Pos : (p2 == q ? Sign::Zero : Sign::Neg);
}

std::complex<double> SurdValue::to_complex() const {
    const double pd = to_double(p);
    const double rd = to_double(r);
    if (q.sign() < 0) {
        const double im = std::sqrt(-to_double(q)) / rd;
        return {pd / rd, branch * im};
    }
    const double root = std::sqrt(to_double(q));
    const bool cancels = (branch > 0) == (p.sign() < 0) && p.sign() != 0 && q.sign() != 0;
    if (!cancels) return {(pd + branch * root) / rd, 0.0};
    // (p + s sqrt q) = (p^2 - q) / (p - s sqrt q), exact numerator.
    const double numer = to_double(p * p - q);
    return {numer / (rd * (pd - branch * root)), 0.0};
}

EigenPair monic_quadratic_roots(const Rational& linear, const Rational& constant) {
    const Rational disc = linear * linear - Rational(4) * constant;
    Rational root;
    if (rational_sqrt(disc, root)) {
        return {SurdValue::rational((-linear + root) / 2), SurdValue::rational((-linear - root) / 2)};
    }
    return {SurdValue{-linear, disc, Rational(2), 1}, SurdValue{-linear, disc, Rational(2), -1}};
}

RationalPoint EquilibriumLine::at(const SystemParams& params, const Rational& alpha) const {
    RationalPoint x;
    x << (params.b1() - params.a12() * alpha) / params.a11(), alpha;
    return x;
}

Equilibrium EquilibriumLine::member(const SystemParams& params, const Rational& alpha) const {
    Equilibrium eq;
    eq.kind = EquilibriumKind::LineMember;
    eq.point = at(params, alpha);
    eq.alpha = alpha;
    eq.eigenvalues = eigenvalues_of(params, eq);
    return eq;
}

const Equilibrium* EquilibriumSet::find(EquilibriumKind kind) const {
    for (const auto& eq : points) {
        if (eq.kind == kind) return &eq;
    }
    return nullptr;
}

namespace {

Equilibrium make(const SystemParams& params, EquilibriumKind kind, Rational x1, Rational x2) {
    Equilibrium eq;
    eq.kind = kind;
    eq.point << std::move(x1), std::move(x2);
    eq.eigenvalues = eigenvalues_of(params, eq);
    return eq;
}

}  // namespace

EquilibriumSet find_equilibria(const SystemParams& params, bool include_off_quadrant) {
    const DeterminantTriple d = compute_determinants(params);
    const SignTriple s = d.signs();

    EquilibriumSet out;
    out.points.push_back(make(params, EquilibriumKind::Origin, Rational(0), Rational(0)));
    Equilibrium e1 = make(params, EquilibriumKind::Axis1, params.b1() / params.a11(), Rational(0));
    Equilibrium e2 = make(params, EquilibriumKind::Axis2, Rational(0), params.b2() / params.a22());

    if (s.d12 == Sign::Zero) {
        if (s.d112 == Sign::Zero && s.d122 == Sign::Zero) {
            out.line = EquilibriumLine{Rational(0), params.b1() / params.a12()};
            e1.coincides_with = EquilibriumKind::LineMember;
            e2.coincides_with = EquilibriumKind::LineMember;
        }
        out.points.push_back(std::move(e1));
        out.points.push_back(std::move(e2));
        return out;
    }

    if (s.d112 == Sign::Zero) e1.coincides_with = EquilibriumKind::Interior;
    if (s.d122 == Sign::Zero) e2.coincides_with = EquilibriumKind::Interior;
    const bool merged = s.d112 == Sign::Zero || s.d122 == Sign::Zero;
    out.points.push_back(std::move(e1));
    out.points.push_back(std::move(e2));
    if (merged) return out;

    const bool in_quadrant = s.d12 == s.d112 && s.d112 == negate(s.d122);
    if (in_quadrant || include_off_quadrant) {
        out.points.push_back(make(params, EquilibriumKind::Interior, -d.d122 / d.d12, d.d112 / d.d12));
    }
    return out;
}

EigenPair eigenvalues_of(const SystemParams& params, const Equilibrium& eq) {
    switch (eq.kind) {
        case EquilibriumKind::Origin:
            return {SurdValue::rational(params.b1()), SurdValue::rational(params.b2())};
        case EquilibriumKind::Axis1: {
            const DeterminantTriple d = compute_determinants(params);
            return {SurdValue::rational(-params.b1()), SurdValue::rational(d.d112 / params.a11())};
        }
        case EquilibriumKind::Axis2: {
            const DeterminantTriple d = compute_determinants(params);
            return {SurdValue::rational(-d.d122 / params.a22()), SurdValue::rational(-params.b2())};
        }
        case EquilibriumKind::Interior: {
            const DeterminantTriple d = compute_determinants(params);
            const Rational& x1 = eq.point(0);
            const Rational& x2 = eq.point(1);
            const Rational linear = params.a11() * x1 + params.a22() * x2;
            const Rational constant = x1 * x2 * d.d12;
            return monic_quadratic_roots(linear, constant);
        }
        case EquilibriumKind::LineMember: {
            const Rational alpha = eq.alpha ? *eq.alpha : eq.point(1);
            return {SurdValue::rational(Rational(0)),
                    SurdValue::rational(-(params.b1() - params.a12() * alpha) - params.a22() * alpha)};
        }
    }
    return {};
}

RationalPoint exact_rhs(const SystemParams& params, const RationalPoint& x) {
    RationalPoint f;
    f << x(0) * (params.b1() - params.a11() * x(0) - params.a12() * x(1)),
        x(1) * (params.b2() - params.a21() * x(0) - params.a22() * x(1));
    return f;
}

}  // namespace lvcomp
