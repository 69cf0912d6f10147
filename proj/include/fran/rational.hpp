#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fran {

/// Exact rational number with a canonical representation: reduced fraction,
/// positive denominator. All delivery-time and DoF accounting goes through
/// this type so golden values like 16/5 compare exactly; no floating point.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on division by zero

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Renders "n" when the value is an integer, "n/d" otherwise.
    std::string str() const;

    /// Parses "n" or "n/d" (optionally signed). Throws std::invalid_argument
    /// on malformed input or zero denominator.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace fran
