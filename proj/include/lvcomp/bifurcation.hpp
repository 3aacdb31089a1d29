#pragma once

// Straight-line parameter sweeps: the three determinants become polynomials
// of degree at most two in the path parameter, whose roots are located
// exactly and classified by comparing the portraits on either side.

#include "lvcomp/classifier.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lvcomp {

/// p(s) = (1 - s) start + s end, componentwise, for s in [0, 1].
struct ParameterPath {
    SystemParams start;
    SystemParams end;

    /// Throws InvalidParams outside [0, 1].
    [[nodiscard]] SystemParams at(const Rational& s) const;
};

enum class DeterminantId { D12, D112, D122 };

[[nodiscard]] const char* to_string(DeterminantId id);

/// c0 + c1 s + c2 s^2.
struct QuadraticPoly {
    Rational c0, c1, c2;

    [[nodiscard]] Rational operator()(const Rational& s) const { return c0 + s * (c1 + s * c2); }
    [[nodiscard]] int degree() const { return c2.sign() != 0 ? 2 : (c1.sign() != 0 ? 1 : 0); }
    [[nodiscard]] bool is_zero() const { return c0.sign() == 0 && c1.sign() == 0 && c2.sign() == 0; }
};

/// d12(s), d112(s), d122(s) in that order.
[[nodiscard]] std::array<QuadraticPoly, 3> determinant_polynomials(const ParameterPath& path);

/// A real root, either exact (lo == hi) or enclosed by an open rational
/// interval (lo, hi) over which the polynomial changes sign.
struct RootEnclosure {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    [[nodiscard]] bool exact() const { return lo == hi; }
    [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
    [[nodiscard]] bool overlaps(const RootEnclosure& other) const { return lo <= other.hi && other.lo <= hi; }
};

struct RootOptions {
    /// Irrational roots are bisected until the enclosure is at most
    /// 2^-precision_bits wide.
    unsigned precision_bits = 64;
    /// Side points sit min(gap, max_side_offset) / 2 from a root.
    Rational max_side_offset{1, 1024};
};

/// Every real root, ascending. Empty for the zero polynomial.
[[nodiscard]] std::vector<RootEnclosure> isolate_roots(const QuadraticPoly& poly, const RootOptions& options = {});

/// Sign of lead * prod (s - r)^m over the isolated roots. Requires s outside
/// every enclosure.
[[nodiscard]] Sign sign_by_factorization(const QuadraticPoly& poly, const std::vector<RootEnclosure>& roots,
                                         const Rational& s);

enum class EventKind { Transcritical, DegenerateLine, SignCaseChangeOnly };

[[nodiscard]] const char* to_string(EventKind k);

/// Coarse behaviour used to compare stability before and after a crossing.
enum class Coarse { Stable, Unstable, Other, Absent };

[[nodiscard]] const char* to_string(Coarse c);

/// Portrait digest at one side point.
struct SideSummary {
    Rational s;
    SignTriple signs;
    int serial = 0;
    /// Closed-quadrant verdict of the axis equilibrium involved.
    std::optional<StabilityClass> axis_class;
    /// Interior solution: closed-quadrant verdict when it lies in the open
    /// quadrant, plane linearization otherwise.
    std::optional<StabilityClass> interior_class;
    bool interior_in_quadrant = false;
    std::optional<RationalPoint> interior_point;
    /// Closed-quadrant verdict of E0.
    std::optional<StabilityClass> origin_class;
    /// Stated-form inequality a22 d112 < a11 d122 at this point.
    bool parenthetical_held = false;

    [[nodiscard]] Coarse axis_coarse() const;
    [[nodiscard]] Coarse interior_coarse() const;
};

struct BifurcationEvent {
    RootEnclosure s_star;
    DeterminantId which = DeterminantId::D12;
    EventKind kind = EventKind::SignCaseChangeOnly;
    /// Axis equilibrium the interior solution passes through (minor roots).
    std::optional<EquilibriumKind> colliding_axis;
    SideSummary before;
    SideSummary after;
    /// a11 x1 + a22 x2 > 0 at the collision point.
    bool trace_condition_held = false;
    /// True when the interior point's limit at s_star coincides with the
    /// axis equilibrium (exactly at rational roots, to enclosure width
    /// otherwise).
    bool collision_verified = false;
    /// Another determinant vanishes at the same s.
    bool co_located = false;
    /// Determinants at s_star, when it is rational.
    std::optional<DeterminantTriple> at_root;
};

struct Tangency {
    RootEnclosure s;
    DeterminantId which = DeterminantId::D12;
};

struct ScanResult {
    /// Sign changes strictly inside (0, 1), ascending in s.
    std::vector<BifurcationEvent> events;
    /// Double roots in [0, 1]: the determinant touches zero without changing
    /// sign. Reported, not classified.
    std::vector<Tangency> tangencies;
    /// Simple roots at s = 0 or s = 1, where only one side exists.
    std::vector<Tangency> endpoint_roots;
};

[[nodiscard]] ScanResult scan_path(const ParameterPath& path, const RootOptions& options = {});

struct CatalogCase {
    std::string name;
    std::string description;
    ParameterPath witness;
    DeterminantId crossing = DeterminantId::D122;
    EquilibriumKind axis = EquilibriumKind::Axis2;
    Sign d12 = Sign::Pos;
};

/// The four transcritical exchanges between the interior solution and an
/// axis equilibrium, each with a witness path built from the figure sets.
[[nodiscard]] std::vector<CatalogCase> four_case_catalog();

}  // namespace lvcomp
