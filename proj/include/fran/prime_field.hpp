#pragma once

#include <cstdint>

namespace fran {

/// Arithmetic in GF(p) for a prime modulus p. The default modulus used by
/// the placement scheme is 65537, so 16-bit payload chunks always fit.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultPrime = 65537;

    /// Throws std::invalid_argument if p is not prime.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const;

    /// Multiplicative inverse; throws std::domain_error for 0.
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace fran
