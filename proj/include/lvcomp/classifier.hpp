#pragma once

#include "lvcomp/equilibria.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvcomp {

enum class Verdict { UnstableNode, Saddle, StableNode, Unstable, AsymptoticallyStable, SemiStable, NonIsolated };

/// FullNeighborhood: stability against perturbations in every direction of
/// the plane. FirstQuadrantClosed: perturbations kept in [0, inf)^2.
/// InteriorOnly: perturbations kept in (0, inf)^2.
enum class Scope { FullNeighborhood, FirstQuadrantClosed, InteriorOnly };

/// How the verdict was established.
enum class Basis { Linearization, NullclineArgument, LyapunovFunction, LineOfEquilibria };

[[nodiscard]] const char* to_string(Verdict v);
[[nodiscard]] const char* to_string(Scope s);
[[nodiscard]] const char* to_string(Basis b);

/// "U", "AS", "SS" or "NI".
[[nodiscard]] const char* short_label(Verdict v);

[[nodiscard]] inline bool is_attracting(Verdict v) {
    return v == Verdict::StableNode || v == Verdict::AsymptoticallyStable;
}
[[nodiscard]] inline bool is_unstable(Verdict v) {
    return v == Verdict::UnstableNode || v == Verdict::Saddle || v == Verdict::Unstable;
}

struct StabilityClass {
    Verdict verdict = Verdict::Unstable;
    Scope scope = Scope::FullNeighborhood;
    Basis basis = Basis::Linearization;

    friend bool operator==(const StabilityClass&, const StabilityClass&) = default;
};

/// Verdict from eigenvalue real-part signs alone; nullopt when a real part is
/// zero.
[[nodiscard]] std::optional<Verdict> linearized_verdict(const EigenPair& eigenvalues);

struct EquilibriumVerdict {
    Equilibrium equilibrium;
    StabilityClass full;
    StabilityClass quadrant;
};

struct ClassificationReport {
    DeterminantTriple determinants;
    SignCase sign_case;
    /// Every equilibrium in the closed first quadrant, ordered E0, E1, E2, E12.
    std::vector<EquilibriumVerdict> equilibria;
    /// Present only in the line-of-equilibria case; applies to every E^alpha.
    std::optional<EquilibriumLine> line;
    std::optional<EquilibriumVerdict> line_member;
    /// The interior solution when it exists outside the closed quadrant,
    /// classified by linearization on the plane (nullopt verdict when not
    /// hyperbolic).
    std::optional<Equilibrium> off_quadrant_interior;
    std::optional<StabilityClass> off_quadrant_class;
    int portrait_class_full = 0;
    int portrait_class_quadrant = 0;

    [[nodiscard]] const EquilibriumVerdict* find(EquilibriumKind kind) const;
};

/// Raised when exact signs land on a triple proven impossible; unreachable
/// from valid parameters.
class InfeasibleSignCase : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[nodiscard]] ClassificationReport classify(const SystemParams& params);

// Theorem predicates over the sign triple. Each one transcribes the listed
// conditions literally so that it can be checked against classify().

/// E1 asymptotically stable on the closed first quadrant.
[[nodiscard]] bool thm_e1_as_on_quadrant(const SignTriple& t);
/// E2 asymptotically stable on the closed first quadrant.
[[nodiscard]] bool thm_e2_as_on_quadrant(const SignTriple& t);
[[nodiscard]] bool thm_e1_unstable(const SignTriple& t);
[[nodiscard]] bool thm_e2_unstable(const SignTriple& t);
/// No equilibrium with both coordinates strictly positive.
[[nodiscard]] bool thm_no_interior(const SignTriple& t);
/// AsymptoticallyStable on (0, inf)^2 for (+,+,-), Unstable for (-,-,+).
[[nodiscard]] std::optional<StabilityClass> thm_e12_class(const SignTriple& t);

struct Disagreement {
    std::string predicate;
    bool theorem = false;
    bool classified = false;
};

/// Empty when every theorem predicate agrees with classify() at the closed
/// quadrant scope.
[[nodiscard]] std::vector<Disagreement> cross_check_theorems(const SystemParams& params);

}  // namespace lvcomp
