#include "lvcomp/bifurcation.hpp"

#include <algorithm>

namespace lvcomp {

const char* to_string(DeterminantId id) {
    switch (id) {
        case DeterminantId::D12: return "d12";
        case DeterminantId::D112: return "d112";
        case DeterminantId::D122: return "d122";
    }
    return "?";
}

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::Transcritical: return "transcritical";
        case EventKind::DegenerateLine: return "degenerate-line";
        case EventKind::SignCaseChangeOnly: return "sign-case-change-only";
    }
    return "?";
}

const char* to_string(Coarse c) {
    switch (c) {
        case Coarse::Stable: return "stable";
        case Coarse::Unstable: return "unstable";
        case Coarse::Other: return "other";
        case Coarse::Absent: return "absent";
    }
    return "?";
}

SystemParams ParameterPath::at(const Rational& s) const {
    if (s.sign() < 0 || s > 1) throw InvalidParams("path parameter must lie in [0, 1], got " + to_string(s));
    const auto a = start.values();
    const auto b = end.values();
    std::array<Rational, 6> v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = (1 - s) * a[i] + s * b[i];
    return SystemParams(v[0], v[1], v[2], v[3], v[4], v[5]);
}

namespace {

// Exact product of two affine functions (p0 + p1 s)(q0 + q1 s).
QuadraticPoly affine_product(const Rational& p0, const Rational& p1, const Rational& q0, const Rational& q1) {
    return {p0 * q0, p0 * q1 + p1 * q0, p1 * q1};
}

QuadraticPoly minus(const QuadraticPoly& a, const QuadraticPoly& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }

}  // namespace

std::array<QuadraticPoly, 3> determinant_polynomials(const ParameterPath& path) {
    const auto a = path.start.values();
    const auto b = path.end.values();
    // Coefficient i as an affine function: a[i] + (b[i] - a[i]) s.
    auto prod = [&](int i, int j) { return affine_product(a[i], b[i] - a[i], a[j], b[j] - a[j]); };
    enum { B1, B2, A11, A12, A21, A22 };
    return {
        minus(prod(A11, A22), prod(A12, A21)),  // d12
        minus(prod(A11, B2), prod(B1, A21)),    // d112
        minus(prod(B2, A12), prod(B1, A22)),    // d122
    };
}

namespace {

Rational cauchy_bound(const QuadraticPoly& p) {
    const Rational lead = p.degree() == 2 ? p.c2 : p.c1;
    Rational m = abs(p.c0 / lead);
    if (p.degree() == 2) m = std::max(m, abs(p.c1 / lead));
    return 1 + m;
}

// Shrinks (lo, hi), across which p changes sign and has no rational root,
// to the requested width.
RootEnclosure bisect(const QuadraticPoly& p, Rational lo, Rational hi, const Rational& width) {
    const int s_lo = p(lo).sign();
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int s_mid = p(mid).sign();
        if (s_mid == 0) return {mid, mid, 1};
        if (s_mid == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi, 1};
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const QuadraticPoly& p, const RootOptions& options) {
    std::vector<RootEnclosure> roots;
    switch (p.degree()) {
        case 0: return roots;
        case 1: {
            const Rational r = -p.c0 / p.c1;
            roots.push_back({r, r, 1});
            return roots;
        }
        default: break;
    }
    const Rational disc = p.c1 * p.c1 - 4 * p.c2 * p.c0;
    if (disc.sign() < 0) return roots;
    const Rational vertex = -p.c1 / (2 * p.c2);
    if (disc.sign() == 0) {
        roots.push_back({vertex, vertex, 2});
        return roots;
    }
    Rational root;
    if (rational_sqrt(disc, root)) {
        Rational r1 = (-p.c1 - root) / (2 * p.c2);
        Rational r2 = (-p.c1 + root) / (2 * p.c2);
        if (r2 < r1) std::swap(r1, r2);
        roots.push_back({r1, r1, 1});
        roots.push_back({r2, r2, 1});
        return roots;
    }
    Rational width = 1;
    for (unsigned i = 0; i < options.precision_bits; ++i) width /= 2;
    const Rational bound = cauchy_bound(p);
    roots.push_back(bisect(p, -bound, vertex, width));
    roots.push_back(bisect(p, vertex, bound, width));
    return roots;
}

Sign sign_by_factorization(const QuadraticPoly& p, const std::vector<RootEnclosure>& roots, const Rational& s) {
    if (p.is_zero()) return Sign::Zero;
    const Rational lead = p.degree() == 2 ? p.c2 : (p.degree() == 1 ? p.c1 : p.c0);
    Sign result = sign_of(lead);
    for (const auto& r : roots) {
        Sign factor;
        if (r.exact()) {
            factor = sign_of(s - r.lo);
        } else if (s < r.lo) {
            factor = Sign::Neg;
        } else if (s > r.hi) {
            factor = Sign::Pos;
        } else {
            throw std::invalid_argument("evaluation point lies inside a root enclosure");
        }
        for (int m = 0; m < r.multiplicity; ++m) result = product(result, factor);
    }
    return result;
}

Coarse SideSummary::axis_coarse() const {
    if (!axis_class) return Coarse::Absent;
    if (is_attracting(axis_class->verdict)) return Coarse::Stable;
    if (is_unstable(axis_class->verdict)) return Coarse::Unstable;
    return Coarse::Other;
}

Coarse SideSummary::interior_coarse() const {
    if (!interior_class) return Coarse::Absent;
    if (is_attracting(interior_class->verdict)) return Coarse::Stable;
    if (is_unstable(interior_class->verdict)) return Coarse::Unstable;
    return Coarse::Other;
}

namespace {

struct Root {
    RootEnclosure where;
    DeterminantId which;
};

SideSummary summarise_side(const ParameterPath& path, const Rational& s, std::optional<EquilibriumKind> axis) {
    const SystemParams params = path.at(s);
    const ClassificationReport report = classify(params);
    SideSummary side;
    side.s = s;
    side.signs = report.sign_case.triple;
    side.serial = report.portrait_class_full;
    const DeterminantTriple& d = report.determinants;
    side.parenthetical_held = params.a22() * d.d112 < params.a11() * d.d122;
    if (const auto* e0 = report.find(EquilibriumKind::Origin)) side.origin_class = e0->quadrant;
    if (axis) {
        if (const auto* e = report.find(*axis)) side.axis_class = e->quadrant;
    }
    if (const auto* e12 = report.find(EquilibriumKind::Interior)) {
        side.interior_class = e12->quadrant;
        side.interior_in_quadrant = true;
        side.interior_point = e12->equilibrium.point;
    } else if (report.off_quadrant_interior) {
        side.interior_class = report.off_quadrant_class;
        side.interior_point = report.off_quadrant_interior->point;
    }
    return side;
}

std::optional<EquilibriumKind> axis_for(DeterminantId id) {
    switch (id) {
        case DeterminantId::D112: return EquilibriumKind::Axis1;
        case DeterminantId::D122: return EquilibriumKind::Axis2;
        case DeterminantId::D12: return std::nullopt;
    }
    return std::nullopt;
}

// Interior coordinates (-d122/d12, d112/d12) against the axis point at a
// rational s where d12 != 0.
bool collides_exactly(const ParameterPath& path, const Rational& s, EquilibriumKind axis) {
    const SystemParams p = path.at(s);
    const DeterminantTriple d = compute_determinants(p);
    if (d.d12.sign() == 0) return false;
    RationalPoint interior;
    interior << -d.d122 / d.d12, d.d112 / d.d12;
    RationalPoint axis_point;
    if (axis == EquilibriumKind::Axis1) {
        axis_point << p.b1() / p.a11(), Rational(0);
    } else {
        axis_point << Rational(0), p.b2() / p.a22();
    }
    return interior == axis_point;
}

// At the enclosure ends the vanishing coordinate has opposite signs and the
// other coordinate stays within the enclosure-scale distance of the axis
// point.
bool collides_within(const ParameterPath& path, const RootEnclosure& r, EquilibriumKind axis) {
    const int idx_zero = axis == EquilibriumKind::Axis1 ? 1 : 0;
    Rational coord[2];
    Rational gap[2];
    for (int k = 0; k < 2; ++k) {
        const SystemParams p = path.at(k == 0 ? r.lo : r.hi);
        const DeterminantTriple d = compute_determinants(p);
        if (d.d12.sign() == 0) return false;
        RationalPoint interior;
        interior << -d.d122 / d.d12, d.d112 / d.d12;
        coord[k] = interior(idx_zero);
        gap[k] = axis == EquilibriumKind::Axis1 ? abs(interior(0) - p.b1() / p.a11())
                                                : abs(interior(1) - p.b2() / p.a22());
    }
    const double tol = 1e-12;
    return coord[0].sign() * coord[1].sign() < 0 && to_double(gap[0]) < tol && to_double(gap[1]) < tol;
}

}  // namespace

ScanResult scan_path(const ParameterPath& path, const RootOptions& options) {
    const auto polys = determinant_polynomials(path);
    constexpr DeterminantId ids[3] = {DeterminantId::D12, DeterminantId::D112, DeterminantId::D122};

    ScanResult result;
    std::vector<Root> crossings;
    for (int i = 0; i < 3; ++i) {
        for (const auto& r : isolate_roots(polys[i], options)) {
            if (r.hi < 0 || r.lo > 1) continue;
            if (r.multiplicity == 2) {
                result.tangencies.push_back({r, ids[i]});
            } else if (r.lo.sign() <= 0 || r.hi >= 1) {
                result.endpoint_roots.push_back({r, ids[i]});
            } else {
                crossings.push_back({r, ids[i]});
            }
        }
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Root& a, const Root& b) { return a.where.midpoint() < b.where.midpoint(); });

    for (std::size_t i = 0; i < crossings.size(); ++i) {
        const Root& root = crossings[i];
        BifurcationEvent ev;
        ev.s_star = root.where;
        ev.which = root.which;
        ev.colliding_axis = axis_for(root.which);

        // Nearest distinct neighbour or boundary on each side.
        const Rational mid = root.where.midpoint();
        Rational gap = std::min(mid, Rational(1) - mid);
        for (std::size_t j = 0; j < crossings.size(); ++j) {
            if (j == i) continue;
            if (crossings[j].where.overlaps(root.where)) {
                ev.co_located = true;
                continue;
            }
            const Rational other = crossings[j].where.midpoint();
            gap = std::min(gap, abs(other - mid));
        }
        for (const auto& t : result.tangencies) {
            if (!t.s.overlaps(root.where)) gap = std::min(gap, abs(t.s.midpoint() - mid));
        }
        const Rational offset = std::min(gap, options.max_side_offset) / 2;
        ev.before = summarise_side(path, mid - offset, ev.colliding_axis);
        ev.after = summarise_side(path, mid + offset, ev.colliding_axis);

        bool all_vanish = false;
        if (root.where.exact()) {
            const DeterminantTriple d = compute_determinants(path.at(root.where.lo));
            ev.at_root = d;
            all_vanish = d.d12.sign() == 0 && d.d112.sign() == 0 && d.d122.sign() == 0;
        } else {
            int vanishing = 0;
            for (int k = 0; k < 3; ++k) {
                for (const auto& r : isolate_roots(polys[k], options)) {
                    if (r.overlaps(root.where)) {
                        ++vanishing;
                        break;
                    }
                }
            }
            all_vanish = vanishing == 3;
        }

        if (ev.colliding_axis) {
            const SystemParams at = path.at(root.where.exact() ? root.where.lo : mid);
            RationalPoint x;
            if (*ev.colliding_axis == EquilibriumKind::Axis1) {
                x << at.b1() / at.a11(), Rational(0);
            } else {
                x << Rational(0), at.b2() / at.a22();
            }
            ev.trace_condition_held = (at.a11() * x(0) + at.a22() * x(1)).sign() > 0;
            ev.collision_verified = root.where.exact() ? collides_exactly(path, root.where.lo, *ev.colliding_axis)
                                                       : collides_within(path, root.where, *ev.colliding_axis);
        }

        const bool swapped = ev.colliding_axis && ev.before.axis_coarse() == ev.after.interior_coarse() &&
                             ev.before.interior_coarse() == ev.after.axis_coarse() &&
                             ev.before.axis_coarse() != ev.after.axis_coarse() &&
                             (ev.before.axis_coarse() == Coarse::Stable || ev.before.axis_coarse() == Coarse::Unstable);
        if (all_vanish) {
            ev.kind = EventKind::DegenerateLine;
        } else if (swapped && ev.collision_verified) {
            ev.kind = EventKind::Transcritical;
        } else {
            ev.kind = EventKind::SignCaseChangeOnly;
        }
        result.events.push_back(std::move(ev));
    }
    return result;
}

std::vector<CatalogCase> four_case_catalog() {
    const auto fig1a = SystemParams::integers(3, 4, 1, 1, 1, 2);
    const auto fig1b = SystemParams::integers(2, 6, 1, 1, 1, 2);
    const auto fig2a = SystemParams::integers(6, 2, 2, 1, 1, 1);
    const auto fig2b = SystemParams::integers(1, 3, 1, 2, 4, 5);
    return {
        {"E2-E12, d12 > 0", "d122 crosses zero with d12 > 0; E12 leaves the quadrant through E2 and the two swap stability",
         {fig1a, fig1b}, DeterminantId::D122, EquilibriumKind::Axis2, Sign::Pos},
        {"E1-E12, d12 > 0", "d112 crosses zero with d12 > 0; E12 moves into the fourth quadrant through E1",
         {fig1a, fig2a}, DeterminantId::D112, EquilibriumKind::Axis1, Sign::Pos},
        {"E1-E12, d12 < 0", "d112 crosses zero with d12 < 0; the saddle E12 leaves through E1, which loses stability",
         {fig2b, SystemParams::integers(1, 5, 1, 2, 4, 5)}, DeterminantId::D112, EquilibriumKind::Axis1, Sign::Neg},
        {"E2-E12, d12 < 0", "d122 crosses zero with d12 < 0; the saddle E12 leaves through E2, which loses stability",
         {fig2b, SystemParams::integers(1, 2, 1, 2, 4, 5)}, DeterminantId::D122, EquilibriumKind::Axis2, Sign::Neg},
    };
}

}  // namespace lvcomp
