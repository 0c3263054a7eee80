#ifndef DETLINK_FIELD_HPP
#define DETLINK_FIELD_HPP

#include <cstdint>

namespace detlink {

/// Arithmetic in the prime field F_p. Values are canonical representatives
/// in [0, p); the modulus must fit a machine word and products are
/// accumulated in double-width integers, so everything stays exact.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p); // rejects non-primes

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t from_int(long long n) const noexcept;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const; // DomainError on 0

    bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

    static bool is_prime(std::uint64_t n) noexcept;

private:
    std::uint64_t p_;
};

} // namespace detlink

#endif
