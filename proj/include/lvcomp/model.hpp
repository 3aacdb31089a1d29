#pragma once

// Parameters of the planar competitive Lotka-Volterra system
//
//   x1' = x1 (b1 - a11 x1 - a12 x2)
//   x2' = x2 (b2 - a21 x1 - a22 x2)
//
// together with the determinant triple (d12, d112, d122) whose signs select
// the qualitative phase portrait.

#include "lvcomp/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace lvcomp {

/// Raised for nonpositive or otherwise unusable parameter sets.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficients converted to some scalar type, for the templated numerics.
template <typename Scalar>
struct Coefficients {
    Scalar b1, b2, a11, a12, a21, a22;
};

/// Six strictly positive exact coefficients. Immutable once built.
class SystemParams {
public:
    /// Throws InvalidParams naming the first nonpositive coefficient.
    SystemParams(Rational b1, Rational b2, Rational a11, Rational a12, Rational a21, Rational a22);

    /// Convenience for integer-valued parameter sets.
    static SystemParams integers(std::int64_t b1, std::int64_t b2, std::int64_t a11,
                                 std::int64_t a12, std::int64_t a21, std::int64_t a22);

    [[nodiscard]] const Rational& b1() const { return b1_; }
    [[nodiscard]] const Rational& b2() const { return b2_; }
    [[nodiscard]] const Rational& a11() const { return a11_; }
    [[nodiscard]] const Rational& a12() const { return a12_; }
    [[nodiscard]] const Rational& a21() const { return a21_; }
    [[nodiscard]] const Rational& a22() const { return a22_; }

    /// Coefficient order b1, b2, a11, a12, a21, a22.
    [[nodiscard]] std::array<Rational, 6> values() const { return {b1_, b2_, a11_, a12_, a21_, a22_}; }

    template <typename Scalar>
    [[nodiscard]] Coefficients<Scalar> as() const {
        if constexpr (std::is_same_v<Scalar, Rational>) {
            return {b1_, b2_, a11_, a12_, a21_, a22_};
        } else {
            return {static_cast<Scalar>(to_double(b1_)),  static_cast<Scalar>(to_double(b2_)),
                    static_cast<Scalar>(to_double(a11_)), static_cast<Scalar>(to_double(a12_)),
                    static_cast<Scalar>(to_double(a21_)), static_cast<Scalar>(to_double(a22_))};
        }
    }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;

private:
    Rational b1_, b2_, a11_, a12_, a21_, a22_;
};

/// Signs of (d12, d112, d122), in that order.
struct SignTriple {
    Sign d12 = Sign::Zero;
    Sign d112 = Sign::Zero;
    Sign d122 = Sign::Zero;

    friend bool operator==(const SignTriple&, const SignTriple&) = default;
    friend auto operator<=>(const SignTriple&, const SignTriple&) = default;
};

[[nodiscard]] std::string to_string(const SignTriple& t);  // e.g. "(+,+,-)"

/// All 27 sign triples in lexicographic order (-, 0, + per slot).
[[nodiscard]] std::array<SignTriple, 27> all_sign_triples();

struct DeterminantTriple {
    Rational d12;   // a11 a22 - a12 a21
    Rational d112;  // a11 b2 - b1 a21
    Rational d122;  // -(b1 a22 - b2 a12)

    [[nodiscard]] SignTriple signs() const { return {sign_of(d12), sign_of(d112), sign_of(d122)}; }
};

[[nodiscard]] DeterminantTriple compute_determinants(const SystemParams& params);

/// Why a sign triple cannot be realized by positive coefficients. Each family
/// corresponds to one of the multiply-and-substitute contradictions.
enum class Infeasibility {
    None,
    OpposedMinors,        // (+,-,+), (-,+,-): d112 and -d122 agree in sign but d12 opposes them
    MinorZeroOpposed,     // (+,-,0), (-,+,0), (+,0,+), (-,0,-): one minor zero, the other opposes d12
    BothMinorsZero,       // (+,0,0), (-,0,0)
    SingularOpposedMinors,// (0,+,-), (0,-,+)
    SingularOneMinorZero, // (0,0,+), (0,0,-), (0,+,0), (0,-,0)
};

[[nodiscard]] const char* to_string(Infeasibility reason);

struct SignCase {
    SignTriple triple;
    bool feasible = false;
    /// Portrait serial 1..9 after merging qualitatively equal cases; set for
    /// every feasible triple.
    std::optional<int> table6_serial;
    /// True when the triple is itself the listed representative of its serial
    /// (as opposed to one merged into it).
    bool representative = false;
    Infeasibility reason = Infeasibility::None;
};

[[nodiscard]] SignCase sign_case(const SignTriple& triple);
[[nodiscard]] inline SignCase sign_case(const DeterminantTriple& d) { return sign_case(d.signs()); }

/// Figure label of the reference portrait for a serial ("1a", ..., "5").
[[nodiscard]] const char* reference_portrait(int serial);

/// Parameter set drawn for a reference portrait label, e.g. "1a" or "5".
[[nodiscard]] std::optional<SystemParams> reference_params(std::string_view label);

/// The nine labels in drawing order: 1a, 1b, 2a, 2b, 3a, 3b, 4a, 4b, 5.
[[nodiscard]] std::array<const char*, 9> reference_labels();

/// Representative serial of the closed-quadrant portrait class: {2,3,6} -> 2,
/// {4,5,7} -> 4, the rest map to themselves.
[[nodiscard]] int quadrant_portrait_class(int serial);

struct NotRealizable {
    SignTriple target;
    std::uint64_t attempts = 0;
};

struct SamplerOptions {
    std::uint64_t attempt_budget = 100000;
    int max_numerator = 8;
    int max_denominator = 8;
};

/// Rejection sampler over positive rationals p/q with p, q bounded by the
/// options. Requested zero determinants are imposed by solving for one
/// dependent coefficient before the exact sign check.
[[nodiscard]] std::variant<SystemParams, NotRealizable> sample_params(const SignTriple& target,
                                                                      std::uint64_t rng_seed,
                                                                      const SamplerOptions& options = {});

}  // namespace lvcomp
