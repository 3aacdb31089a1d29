#include "lvcomp/model.hpp"

#include <map>
#include <random>

namespace lvcomp {

namespace {

void require_positive(const Rational& value, const char* name) {
    if (value.sign() <= 0) throw InvalidParams(std::string(name) + " must be positive");
}

struct CaseEntry {
    bool feasible;
    int serial;  // 0 when infeasible
    bool representative;
    Infeasibility reason;
};

constexpr Sign N = Sign::Neg;
constexpr Sign Z = Sign::Zero;
constexpr Sign P = Sign::Pos;

const std::map<SignTriple, CaseEntry>& case_table() {
    static const std::map<SignTriple, CaseEntry> table = {
        // d12 > 0
        {{P, P, N}, {true, 1, true, Infeasibility::None}},
        {{P, P, Z}, {true, 2, true, Infeasibility::None}},
        {{P, P, P}, {true, 3, true, Infeasibility::None}},
        {{P, Z, N}, {true, 4, true, Infeasibility::None}},
        {{P, N, N}, {true, 5, true, Infeasibility::None}},
        {{P, N, P}, {false, 0, false, Infeasibility::OpposedMinors}},
        {{P, N, Z}, {false, 0, false, Infeasibility::MinorZeroOpposed}},
        {{P, Z, P}, {false, 0, false, Infeasibility::MinorZeroOpposed}},
        {{P, Z, Z}, {false, 0, false, Infeasibility::BothMinorsZero}},
        // d12 < 0
        {{N, Z, P}, {true, 6, true, Infeasibility::None}},
        {{N, N, Z}, {true, 7, true, Infeasibility::None}},
        {{N, N, P}, {true, 8, true, Infeasibility::None}},
        {{N, P, P}, {true, 3, false, Infeasibility::None}},
        {{N, N, N}, {true, 5, false, Infeasibility::None}},
        {{N, P, N}, {false, 0, false, Infeasibility::OpposedMinors}},
        {{N, P, Z}, {false, 0, false, Infeasibility::MinorZeroOpposed}},
        {{N, Z, N}, {false, 0, false, Infeasibility::MinorZeroOpposed}},
        {{N, Z, Z}, {false, 0, false, Infeasibility::BothMinorsZero}},
        // d12 = 0
        {{Z, Z, Z}, {true, 9, true, Infeasibility::None}},
        {{Z, P, P}, {true, 3, false, Infeasibility::None}},
        {{Z, N, N}, {true, 5, false, Infeasibility::None}},
        {{Z, P, N}, {false, 0, false, Infeasibility::SingularOpposedMinors}},
        {{Z, N, P}, {false, 0, false, Infeasibility::SingularOpposedMinors}},
        {{Z, Z, P}, {false, 0, false, Infeasibility::SingularOneMinorZero}},
        {{Z, Z, N}, {false, 0, false, Infeasibility::SingularOneMinorZero}},
        {{Z, P, Z}, {false, 0, false, Infeasibility::SingularOneMinorZero}},
        {{Z, N, Z}, {false, 0, false, Infeasibility::SingularOneMinorZero}},
    };
    return table;
}

}  // namespace

SystemParams::SystemParams(Rational b1, Rational b2, Rational a11, Rational a12, Rational a21, Rational a22)
    : b1_(std::move(b1)), b2_(std::move(b2)), a11_(std::move(a11)), a12_(std::move(a12)),
      a21_(std::move(a21)), a22_(std::move(a22)) {
    require_positive(b1_, "b1");
    require_positive(b2_, "b2");
    require_positive(a11_, "a11");
    require_positive(a12_, "a12");
    require_positive(a21_, "a21");
    require_positive(a22_, "a22");
}

SystemParams SystemParams::integers(std::int64_t b1, std::int64_t b2, std::int64_t a11, std::int64_t a12,
                                    std::int64_t a21, std::int64_t a22) {
    return SystemParams(make_rational(b1), make_rational(b2), make_rational(a11), make_rational(a12),
                        make_rational(a21), make_rational(a22));
}

std::string to_string(const SignTriple& t) {
    std::string out = "(";
    out += sign_char(t.d12);
    out += ',';
    out += sign_char(t.d112);
    out += ',';
    out += sign_char(t.d122);
    out += ')';
    return out;
}

std::array<SignTriple, 27> all_sign_triples() {
    std::array<SignTriple, 27> out{};
    constexpr std::array<Sign, 3> signs = {Sign::Neg, Sign::Zero, Sign::Pos};
    std::size_t k = 0;
    for (Sign s12 : signs)
        for (Sign s112 : signs)
            for (Sign s122 : signs) out[k++] = {s12, s112, s122};
    return out;
}

DeterminantTriple compute_determinants(const SystemParams& p) {
    DeterminantTriple d;
    d.d12 = p.a11() * p.a22() - p.a12() * p.a21();
    d.d112 = p.a11() * p.b2() - p.b1() * p.a21();
    d.d122 = -(p.b1() * p.a22() - p.b2() * p.a12());
    return d;
}

const char* to_string(Infeasibility reason) {
    switch (reason) {
        case Infeasibility::None: return "none";
        case Infeasibility::OpposedMinors: return "opposed-minors";
        case Infeasibility::MinorZeroOpposed: return "minor-zero-opposed";
        case Infeasibility::BothMinorsZero: return "both-minors-zero";
        case Infeasibility::SingularOpposedMinors: return "singular-opposed-minors";
        case Infeasibility::SingularOneMinorZero: return "singular-one-minor-zero";
    }
    return "unknown";
}

SignCase sign_case(const SignTriple& triple) {
    const CaseEntry& entry = case_table().at(triple);
    SignCase out;
    out.triple = triple;
    out.feasible = entry.feasible;
    if (entry.feasible) out.table6_serial = entry.serial;
    out.representative = entry.representative;
    out.reason = entry.reason;
    return out;
}

const char* reference_portrait(int serial) {
    switch (serial) {
        case 1: return "1a";
        case 2: return "3a";
        case 3: return "1b";
        case 4: return "4a";
        case 5: return "2a";
        case 6: return "4b";
        case 7: return "3b";
        case 8: return "2b";
        case 9: return "5";
        default: return "";
    }
}

std::array<const char*, 9> reference_labels() { return {"1a", "1b", "2a", "2b", "3a", "3b", "4a", "4b", "5"}; }

std::optional<SystemParams> reference_params(std::string_view label) {
    struct Entry {
        const char* label;
        std::int64_t b1, b2, a11, a12, a21, a22;
    };
    static constexpr Entry table[] = {
        {"1a", 3, 4, 1, 1, 1, 2}, {"1b", 2, 6, 1, 1, 1, 2}, {"2a", 6, 2, 2, 1, 1, 1},
        {"2b", 1, 3, 1, 2, 4, 5}, {"3a", 2, 4, 1, 1, 1, 2}, {"3b", 2, 1, 1, 2, 1, 1},
        {"4a", 1, 1, 1, 2, 1, 4}, {"4b", 1, 1, 1, 4, 1, 2}, {"5", 1, 2, 1, 2, 2, 4},
    };
    for (const auto& e : table) {
        if (label == e.label) return SystemParams::integers(e.b1, e.b2, e.a11, e.a12, e.a21, e.a22);
    }
    return std::nullopt;
}

int quadrant_portrait_class(int serial) {
    switch (serial) {
        case 2:
        case 3:
        case 6: return 2;
        case 4:
        case 5:
        case 7: return 4;
        default: return serial;
    }
}

std::variant<SystemParams, NotRealizable> sample_params(const SignTriple& target, std::uint64_t rng_seed,
                                                        const SamplerOptions& options) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> num(1, options.max_numerator);
    std::uniform_int_distribution<int> den(1, options.max_denominator);
    auto draw = [&] { return make_rational(num(rng), den(rng)); };

    for (std::uint64_t attempt = 1; attempt <= options.attempt_budget; ++attempt) {
        Rational b1 = draw(), b2 = draw(), a11 = draw(), a12 = draw(), a21 = draw(), a22 = draw();
        if (target.d112 == Sign::Zero && target.d122 == Sign::Zero) {
            a21 = a11 * b2 / b1;
            a22 = a12 * b2 / b1;
        } else if (target.d122 == Sign::Zero) {
            a12 = a22 * b1 / b2;
        } else if (target.d112 == Sign::Zero) {
            a21 = a11 * b2 / b1;
        }
        if (target.d12 == Sign::Zero && !(target.d112 == Sign::Zero && target.d122 == Sign::Zero)) {
            a22 = a12 * a21 / a11;
        }
        SystemParams candidate(b1, b2, a11, a12, a21, a22);
        if (compute_determinants(candidate).signs() == target) return candidate;
    }
    return NotRealizable{target, options.attempt_budget};
}

}  // namespace lvcomp
