#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's sign logic: determinants are recomputed with machine
// integers and feasibility is derived from the two linear identities
//
//   b2 d12 = a22 d112 - a21 d122
//   b1 d12 = a12 d112 - a11 d122
//
// which tie sign(d12) to the possible signs of a positive combination of
// d112 and -d122.

#include "lvcomp/classifier.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace lvtest {

using lvcomp::Sign;
using lvcomp::SignTriple;

inline Sign sgn(std::int64_t v) { return v < 0 ? Sign::Neg : (v > 0 ? Sign::Pos : Sign::Zero); }

struct IntParams {
    std::int64_t b1, b2, a11, a12, a21, a22;

    [[nodiscard]] SignTriple signs() const {
        return {sgn(a11 * a22 - a12 * a21), sgn(a11 * b2 - b1 * a21), sgn(b2 * a12 - b1 * a22)};
    }
    [[nodiscard]] lvcomp::SystemParams exact() const {
        return lvcomp::SystemParams::integers(b1, b2, a11, a12, a21, a22);
    }
};

/// Signs reachable by alpha * u + beta * v for arbitrary alpha, beta > 0.
inline std::set<Sign> positive_combination_signs(Sign u, Sign v) {
    if (u == Sign::Zero && v == Sign::Zero) return {Sign::Zero};
    if (u == Sign::Zero) return {v};
    if (v == Sign::Zero) return {u};
    if (u == v) return {u};
    return {Sign::Neg, Sign::Zero, Sign::Pos};
}

/// Necessary condition from the identities; the census shows it is also
/// sufficient.
inline bool identity_feasible(const SignTriple& t) {
    return positive_combination_signs(t.d112, lvcomp::negate(t.d122)).count(t.d12) > 0;
}

inline std::string triple_string(Sign a, Sign b, Sign c) {
    return std::string("(") + lvcomp::sign_char(a) + "," + lvcomp::sign_char(b) + "," + lvcomp::sign_char(c) + ")";
}

/// One row of the published serial table: representative triple and the
/// full-plane labels of E0, E1, E2, E12 and the line member ("/" = absent).
struct SerialRow {
    int serial;
    const char* triple;
    const char* e0;
    const char* e1;
    const char* e2;
    const char* e12;
    const char* line;
    const char* figure;
};

inline const std::array<SerialRow, 9>& serial_rows() {
    static const std::array<SerialRow, 9> rows{{
        {1, "(+,+,-)", "U", "U", "U", "AS", "/", "1a"},
        {2, "(+,+,0)", "U", "U", "SS", "/", "/", "3a"},
        {3, "(+,+,+)", "U", "U", "AS", "/", "/", "1b"},
        {4, "(+,0,-)", "U", "SS", "U", "/", "/", "4a"},
        {5, "(+,-,-)", "U", "AS", "U", "/", "/", "2a"},
        {6, "(-,0,+)", "U", "U", "AS", "/", "/", "4b"},
        {7, "(-,-,0)", "U", "AS", "U", "/", "/", "3b"},
        {8, "(-,-,+)", "U", "AS", "AS", "U", "/", "2b"},
        {9, "(0,0,0)", "U", "NI", "NI", "/", "NI", "5"},
    }};
    return rows;
}

/// Non-representative feasible triples and the serial they merge into.
inline const std::map<std::string, int>& merged_triples() {
    static const std::map<std::string, int> m{
        {"(-,+,+)", 3}, {"(0,+,+)", 3}, {"(-,-,-)", 5}, {"(0,-,-)", 5}};
    return m;
}

/// Collects the labels classify() assigns, in the same shape as SerialRow.
struct ObservedRow {
    std::string e0 = "/", e1 = "/", e2 = "/", e12 = "/", line = "/";
};

inline ObservedRow observe(const lvcomp::ClassificationReport& r) {
    using lvcomp::EquilibriumKind;
    ObservedRow row;
    for (const auto& v : r.equilibria) {
        const std::string label = lvcomp::short_label(v.full.verdict);
        switch (v.equilibrium.kind) {
            case EquilibriumKind::Origin: row.e0 = label; break;
            case EquilibriumKind::Axis1: row.e1 = label; break;
            case EquilibriumKind::Axis2: row.e2 = label; break;
            case EquilibriumKind::Interior: row.e12 = label; break;
            case EquilibriumKind::LineMember: break;
        }
    }
    if (r.line_member) row.line = lvcomp::short_label(r.line_member->full.verdict);
    return row;
}

/// Random positive rational p/q with 1 <= p, q <= bound.
inline lvcomp::Rational random_positive(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> d(1, bound);
    const int p = d(rng);
    const int q = d(rng);
    return lvcomp::make_rational(p, q);
}

/// Feasible triples according to identity_feasible.
inline const std::vector<SignTriple>& oracle_feasible_triples() {
    static const std::vector<SignTriple> list = [] {
        std::vector<SignTriple> out;
        for (const auto& t : lvcomp::all_sign_triples()) {
            if (identity_feasible(t)) out.push_back(t);
        }
        return out;
    }();
    return list;
}

/// Parameter set for a uniformly chosen feasible triple.
inline lvcomp::SystemParams random_feasible(std::mt19937_64& rng) {
    const auto& list = oracle_feasible_triples();
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    for (;;) {
        const auto drawn = lvcomp::sample_params(list[pick(rng)], rng());
        if (const auto* p = std::get_if<lvcomp::SystemParams>(&drawn)) return *p;
    }
}

/// Parameter set drawn for one of the two triples with an interior point.
inline lvcomp::SystemParams random_with_interior(std::mt19937_64& rng) {
    const SignTriple targets[2] = {{Sign::Pos, Sign::Pos, Sign::Neg}, {Sign::Neg, Sign::Neg, Sign::Pos}};
    for (;;) {
        const auto drawn = lvcomp::sample_params(targets[rng() % 2], rng());
        if (const auto* p = std::get_if<lvcomp::SystemParams>(&drawn)) return *p;
    }
}

}  // namespace lvtest
