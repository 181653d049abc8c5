#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "acx/error.hpp"

namespace acx {

/// Exact nonnegative-denominator rational, always kept in lowest terms.
/// Used for exponents (p/q) and for thresholds such as |w|/c, so that
/// no decision ever goes through floating point.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw error(errc::invalid_argument, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Integer part (floor, for nonnegative values).
    constexpr std::int64_t whole() const noexcept { return num_ / den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q" or "a+p/q" (mixed form, e.g. "2+1/8").
    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view part) -> std::int64_t {
            if (part.empty())
                throw error(errc::parse_error, "bad rational '" + std::string(text) + "'");
            std::int64_t value = 0;
            for (char ch : part) {
                if (ch < '0' || ch > '9')
                    throw error(errc::parse_error, "bad rational '" + std::string(text) + "'");
                value = value * 10 + (ch - '0');
            }
            return value;
        };
        auto parse_simple = [&](std::string_view part) -> Rational {
            const auto slash = part.find('/');
            if (slash == std::string_view::npos)
                return Rational(parse_int(part));
            return Rational(parse_int(part.substr(0, slash)), parse_int(part.substr(slash + 1)));
        };
        const auto plus = text.find('+');
        if (plus == std::string_view::npos)
            return parse_simple(text);
        return Rational(parse_int(text.substr(0, plus))) + parse_simple(text.substr(plus + 1));
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace acx
