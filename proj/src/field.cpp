#include "detlink/field.hpp"

#include "detlink/errors.hpp"

namespace detlink {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 62))
        throw UsageError("characteristic too large: " + std::to_string(p));
    if (!is_prime(p))
        throw UsageError("characteristic must be a prime >= 2, got " + std::to_string(p));
}

std::uint64_t PrimeField::from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0)
        r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b; // a, b < p <= 2^63, no overflow
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::neg(std::uint64_t a) const noexcept {
    return a == 0 ? 0 : p_ - a;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    std::uint64_t base = a % p_;
    while (e != 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0)
        throw DomainError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

bool PrimeField::is_prime(std::uint64_t n) noexcept {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace detlink
