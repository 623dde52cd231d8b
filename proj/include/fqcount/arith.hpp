#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fqcount {

struct PrimeFactor {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization of n, primes strictly increasing, exponents >= 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimeFactor> factors;

    /// Smallest prime dividing n. Undefined (throws) for n = 1.
    std::uint64_t least_prime() const;

    /// Number of positive divisors, prod (exponent + 1).
    std::uint64_t divisor_count() const;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

/// Factorize n >= 1 by trial division backed by the shared factor sieve.
Factorization factorize(std::uint64_t n);

/// Smallest prime dividing n, for n >= 2.
std::uint64_t least_prime_factor(std::uint64_t n);

/// Mobius function: 0 when d has a squared prime factor, otherwise
/// (-1)^(number of prime factors). Requires d >= 1.
int mobius(std::uint64_t d);

/// All positive divisors of n >= 1, sorted ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Decomposes q = p^k with p prime, k >= 1. Throws NotPrimePowerError when
/// no such decomposition exists, DomainError for q < 2.
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);

/// Smallest-prime-factor table, immutable after construction. Concurrent
/// readers are safe.
class FactorSieve {
public:
    explicit FactorSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }

    /// Smallest prime factor of n, for 2 <= n <= limit().
    std::uint32_t smallest_factor(std::uint32_t n) const;

    /// Process-wide sieve with the default limit of 10^6.
    static const FactorSieve& shared();

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

} // namespace fqcount
