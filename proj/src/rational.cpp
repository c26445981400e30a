#include "infnet/rational.hpp"

#include <cctype>

#include "infnet/error.hpp"

namespace infnet {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(whole) + "'");
    }
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

std::optional<BigInt> exact_isqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        if (!frac.empty() && !all_digits(frac)) {
            throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(text) + "'");
        }
        std::string_view head = text.substr(0, dot);
        bool negative = !head.empty() && head.front() == '-';
        std::string_view head_digits = head;
        if (!head_digits.empty() && (head_digits.front() == '-' || head_digits.front() == '+')) head_digits.remove_prefix(1);
        if (head_digits.empty() && frac.empty()) {
            throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(text) + "'");
        }
        BigInt whole = head_digits.empty() ? BigInt(0) : parse_integer(head_digits, text);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt fraction = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
        Rational value(BigInt(whole * scale + fraction), scale);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
    return value.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    auto num = exact_isqrt(boost::multiprecision::numerator(value));
    auto den = exact_isqrt(boost::multiprecision::denominator(value));
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace infnet
