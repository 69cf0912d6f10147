#include "fran/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fran {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("rational denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : den;
}

Rational Rational::operator-() const {
    return Rational(-num_, den_);
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    // Reduce in 128-bit before narrowing so intermediate growth cannot overflow.
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    const __int128 g = a == 0 ? 1 : a;
    return Rational(narrow(n / g), narrow(d / g));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + (-o);
}

Rational Rational::operator*(const Rational& o) const {
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    const __int128 n = static_cast<__int128>(num_ / (g1 ? g1 : 1)) * (o.num_ / (g2 ? g2 : 1));
    const __int128 d = static_cast<__int128>(den_ / (g2 ? g2 : 1)) * (o.den_ / (g1 ? g1 : 1));
    return Rational(narrow(n), narrow(d));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const std::int64_t n = parse_int(text.substr(0, slash));
    const std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) {
        throw std::invalid_argument("rational denominator must be nonzero");
    }
    return Rational(n, d);
}

}  // namespace fran
