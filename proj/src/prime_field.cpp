#include "fran/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace fran {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    }
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(p_) - b);
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const {
    std::uint32_t acc = 1;
    std::uint32_t b = base % p_;
    while (exp != 0) {
        if (exp & 1) acc = mul(acc, b);
        b = mul(b, b);
        exp >>= 1;
    }
    return acc;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) {
        throw std::domain_error("no inverse of 0 in GF(" + std::to_string(p_) + ")");
    }
    // Fermat: a^(p-2) mod p.
    return pow(a, p_ - 2);
}

}  // namespace fran
