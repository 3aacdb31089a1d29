#include "lvcomp/rational.hpp"

#include <cctype>
#include <cmath>

namespace lvcomp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// GMP reads a leading zero as an octal prefix, so digits are normalized first.
Integer decimal_integer(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer{std::string(digits)};
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("not a number: '" + std::string(whole) + "'");
    const Integer value = decimal_integer(s);
    return negative ? Integer(-value) : value;
}

Integer pow10(unsigned exponent) {
    Integer result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= 10;
    return result;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            throw ParseError("bad exponent in '" + std::string(whole) + "'");
        }
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    const auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("not a number: '" + std::string(whole) + "'");
    }
    digits.append(int_part);
    digits.append(frac_part);
    exponent -= static_cast<long>(frac_part.size());
    Rational value{decimal_integer(digits)};
    if (exponent > 0) {
        value *= Rational(pow10(static_cast<unsigned>(exponent)));
    } else if (exponent < 0) {
        value /= Rational(pow10(static_cast<unsigned>(-exponent)));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace

char sign_char(Sign s) {
    switch (s) {
        case Sign::Neg: return '-';
        case Sign::Zero: return '0';
        case Sign::Pos: return '+';
    }
    return '?';
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash), text);
        const Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational value{num};
        value /= Rational(den);
        return value;
    }
    return parse_decimal(text, text);
}

std::string to_string(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite value cannot be made exact");
    return Rational(value);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ParseError("zero denominator");
    Rational value{Integer(num)};
    value /= Rational(Integer(den));
    return value;
}

bool rational_sqrt(const Rational& value, Rational& root) {
    if (value.sign() < 0) return false;
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    const Integer rn = boost::multiprecision::sqrt(num);
    const Integer rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    root = Rational(rn);
    root /= Rational(rd);
    return true;
}

}  // namespace lvcomp
