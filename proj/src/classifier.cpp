#include "lvcomp/classifier.hpp"

namespace lvcomp {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::UnstableNode: return "unstable-node";
        case Verdict::Saddle: return "saddle";
        case Verdict::StableNode: return "stable-node";
        case Verdict::Unstable: return "unstable";
        case Verdict::AsymptoticallyStable: return "asymptotically-stable";
        case Verdict::SemiStable: return "semi-stable";
        case Verdict::NonIsolated: return "non-isolated";
    }
    return "?";
}

const char* to_string(Scope s) {
    switch (s) {
        case Scope::FullNeighborhood: return "full-neighborhood";
        case Scope::FirstQuadrantClosed: return "first-quadrant-closed";
        case Scope::InteriorOnly: return "interior-only";
    }
    return "?";
}

const char* to_string(Basis b) {
    switch (b) {
        case Basis::Linearization: return "linearization";
        case Basis::NullclineArgument: return "nullcline-argument";
        case Basis::LyapunovFunction: return "lyapunov-function";
        case Basis::LineOfEquilibria: return "line-of-equilibria";
    }
    return "?";
}

const char* short_label(Verdict v) {
    switch (v) {
        case Verdict::UnstableNode:
        case Verdict::Saddle:
        case Verdict::Unstable: return "U";
        case Verdict::StableNode:
        case Verdict::AsymptoticallyStable: return "AS";
        case Verdict::SemiStable: return "SS";
        case Verdict::NonIsolated: return "NI";
    }
    return "?";
}

std::optional<Verdict> linearized_verdict(const EigenPair& eigenvalues) {
    const auto [s1, s2] = eigenvalues.realpart_signs();
    if (s1 == Sign::Zero || s2 == Sign::Zero) return std::nullopt;
    const bool real = eigenvalues.lambda1.is_real();
    if (s1 == Sign::Neg && s2 == Sign::Neg) return real ? Verdict::StableNode : Verdict::AsymptoticallyStable;
    if (s1 == Sign::Pos && s2 == Sign::Pos) return real ? Verdict::UnstableNode : Verdict::Unstable;
    return Verdict::Saddle;
}

const EquilibriumVerdict* ClassificationReport::find(EquilibriumKind kind) const {
    for (const auto& v : equilibria) {
        if (v.equilibrium.kind == kind) return &v;
    }
    return nullptr;
}

namespace {

EquilibriumVerdict hyperbolic(const Equilibrium& eq) {
    const auto verdict = linearized_verdict(eq.eigenvalues);
    if (!verdict) throw InfeasibleSignCase(std::string("expected a hyperbolic ") + to_string(eq.kind));
    return {eq, {*verdict, Scope::FullNeighborhood, Basis::Linearization},
            {*verdict, Scope::FirstQuadrantClosed, Basis::Linearization}};
}

EquilibriumVerdict classify_point(const Equilibrium& eq, const SignTriple& s) {
    if (eq.coincides_with == EquilibriumKind::LineMember) {
        return {eq, {Verdict::NonIsolated, Scope::FullNeighborhood, Basis::LineOfEquilibria},
                {Verdict::NonIsolated, Scope::FirstQuadrantClosed, Basis::LineOfEquilibria}};
    }
    if (eq.coincides_with == EquilibriumKind::Interior) {
        // One zero eigenvalue: the merged interior point decides the side
        // behaviour. d12 > 0 attracts from the open quadrant and repels from
        // the adjacent off-quadrant wedge; d12 < 0 repels into the quadrant.
        if (s.d12 == Sign::Pos) {
            return {eq, {Verdict::SemiStable, Scope::FullNeighborhood, Basis::NullclineArgument},
                    {Verdict::AsymptoticallyStable, Scope::FirstQuadrantClosed, Basis::LyapunovFunction}};
        }
        return {eq, {Verdict::Unstable, Scope::FullNeighborhood, Basis::NullclineArgument},
                {Verdict::Unstable, Scope::FirstQuadrantClosed, Basis::NullclineArgument}};
    }
    return hyperbolic(eq);
}

}  // namespace

ClassificationReport classify(const SystemParams& params) {
    ClassificationReport report;
    report.determinants = compute_determinants(params);
    const SignTriple s = report.determinants.signs();
    report.sign_case = sign_case(s);
    if (!report.sign_case.feasible) {
        throw InfeasibleSignCase("exact signs " + to_string(s) + " match an impossible case (" +
                                 to_string(report.sign_case.reason) + ")");
    }

    const EquilibriumSet set = find_equilibria(params, /*include_off_quadrant=*/true);
    for (const auto& eq : set.points) {
        if (eq.kind == EquilibriumKind::Interior && !eq.in_open_quadrant()) {
            report.off_quadrant_interior = eq;
            if (const auto v = linearized_verdict(eq.eigenvalues)) {
                report.off_quadrant_class = StabilityClass{*v, Scope::FullNeighborhood, Basis::Linearization};
            }
            continue;
        }
        report.equilibria.push_back(classify_point(eq, s));
    }

    if (set.line) {
        report.line = set.line;
        const Rational mid = (set.line->alpha_min + set.line->alpha_max) / 2;
        report.line_member = EquilibriumVerdict{
            set.line->member(params, mid),
            {Verdict::NonIsolated, Scope::FullNeighborhood, Basis::LineOfEquilibria},
            {Verdict::NonIsolated, Scope::FirstQuadrantClosed, Basis::LineOfEquilibria}};
    }

    report.portrait_class_full = *report.sign_case.table6_serial;
    report.portrait_class_quadrant = quadrant_portrait_class(report.portrait_class_full);
    return report;
}

namespace {

constexpr Sign N = Sign::Neg;
constexpr Sign Z = Sign::Zero;
constexpr Sign P = Sign::Pos;

bool e1_condition(const SignTriple& t, int which) {
    switch (which) {
        case 1: return t.d112 == N && t.d122 == N;
        case 2: return t.d12 == N && t.d112 == N && t.d122 == Z;
        case 3: return t.d12 == P && t.d112 == Z && t.d122 == N;
        case 4: return t.d12 == N && t.d112 == N && t.d122 == P;
        default: return false;
    }
}

bool e2_condition(const SignTriple& t, int which) {
    switch (which) {
        case 1: return t.d112 == P && t.d122 == P;
        case 2: return t.d12 == P && t.d112 == P && t.d122 == Z;
        case 3: return t.d12 == N && t.d112 == Z && t.d122 == P;
        case 4: return t.d12 == N && t.d112 == N && t.d122 == P;
        default: return false;
    }
}

bool coexistence_case(const SignTriple& t) { return t.d12 == P && t.d112 == P && t.d122 == N; }

}  // namespace

bool thm_e1_as_on_quadrant(const SignTriple& t) {
    return e1_condition(t, 1) || e1_condition(t, 2) || e1_condition(t, 3) || e1_condition(t, 4);
}

bool thm_e2_as_on_quadrant(const SignTriple& t) {
    return e2_condition(t, 1) || e2_condition(t, 2) || e2_condition(t, 3) || e2_condition(t, 4);
}

bool thm_e1_unstable(const SignTriple& t) {
    return e2_condition(t, 1) || e2_condition(t, 2) || e2_condition(t, 3) || coexistence_case(t);
}

bool thm_e2_unstable(const SignTriple& t) {
    return e1_condition(t, 1) || e1_condition(t, 2) || e1_condition(t, 3) || coexistence_case(t);
}

bool thm_no_interior(const SignTriple& t) {
    return e1_condition(t, 1) || e1_condition(t, 2) || e1_condition(t, 3) || e2_condition(t, 1) ||
           e2_condition(t, 2) || e2_condition(t, 3);
}

std::optional<StabilityClass> thm_e12_class(const SignTriple& t) {
    if (coexistence_case(t)) return StabilityClass{Verdict::AsymptoticallyStable, Scope::InteriorOnly, Basis::Linearization};
    if (t.d12 == N && t.d112 == N && t.d122 == P) {
        return StabilityClass{Verdict::Unstable, Scope::FullNeighborhood, Basis::Linearization};
    }
    return std::nullopt;
}

std::vector<Disagreement> cross_check_theorems(const SystemParams& params) {
    const ClassificationReport report = classify(params);
    const SignTriple t = report.sign_case.triple;
    std::vector<Disagreement> out;
    auto check = [&](const char* name, bool theorem, bool classified) {
        if (theorem != classified) out.push_back({name, theorem, classified});
    };

    const auto* e1 = report.find(EquilibriumKind::Axis1);
    const auto* e2 = report.find(EquilibriumKind::Axis2);
    const auto* e12 = report.find(EquilibriumKind::Interior);
    check("thm_e1_as_on_quadrant", thm_e1_as_on_quadrant(t), e1 && is_attracting(e1->quadrant.verdict));
    check("thm_e2_as_on_quadrant", thm_e2_as_on_quadrant(t), e2 && is_attracting(e2->quadrant.verdict));
    check("thm_e1_unstable", thm_e1_unstable(t), e1 && is_unstable(e1->quadrant.verdict));
    check("thm_e2_unstable", thm_e2_unstable(t), e2 && is_unstable(e2->quadrant.verdict));

    bool open_quadrant_equilibrium = report.line.has_value();
    for (const auto& v : report.equilibria) open_quadrant_equilibrium |= v.equilibrium.in_open_quadrant();
    check("thm_no_interior", thm_no_interior(t), !open_quadrant_equilibrium);

    const auto e12_theorem = thm_e12_class(t);
    check("thm_e12_class:exists", e12_theorem.has_value(), e12 != nullptr);
    if (e12_theorem && e12) {
        check("thm_e12_class:attracting", is_attracting(e12_theorem->verdict), is_attracting(e12->quadrant.verdict));
        check("thm_e12_class:unstable", is_unstable(e12_theorem->verdict), is_unstable(e12->quadrant.verdict));
    }
    return out;
}

}  // namespace lvcomp
