#pragma once

// Exact rational scalar used by the analytic modules, plus the helpers that
// bridge it to text and to floating point.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lvcomp {

/// Arbitrary-precision rational, always kept in reduced form with a positive
/// denominator (GMP canonicalizes after every operation).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

using RationalPoint = Vector2<Rational>;

enum class Sign : int { Neg = -1, Zero = 0, Pos = 1 };

[[nodiscard]] inline Sign sign_of(const Rational& value) {
    const int s = value.sign();
    return s < 0 ? Sign::Neg : (s > 0 ? Sign::Pos : Sign::Zero);
}

[[nodiscard]] inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

[[nodiscard]] inline Sign product(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// '+', '0' or '-'.
[[nodiscard]] char sign_char(Sign s);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accepts "7", "-7", "22/7", "0.125", "-1.5e-3". Decimal forms are converted
/// exactly (0.1 becomes 1/10, not the nearest binary double).
[[nodiscard]] Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
[[nodiscard]] std::string to_string(const Rational& value);

[[nodiscard]] double to_double(const Rational& value);

/// Exact binary value of a finite double.
[[nodiscard]] Rational from_double(double value);

[[nodiscard]] Rational make_rational(std::int64_t num, std::int64_t den = 1);

[[nodiscard]] inline Rational abs(const Rational& value) { return value.sign() < 0 ? Rational(-value) : value; }

/// True when value is the square of a rational; root receives the
/// non-negative square root in that case.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace lvcomp
