#include "fqcount/arith.hpp"

#include <algorithm>
#include <cmath>

#include "fqcount/errors.hpp"

namespace fqcount {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Witness set deterministic for all n < 3.3 * 10^24, well past 64 bits.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::uint32_t FactorSieve::smallest_factor(std::uint32_t n) const {
    if (n < 2 || n > limit_) throw DomainError("factor sieve lookup out of range");
    return spf_[n];
}

const FactorSieve& FactorSieve::shared() {
    static const FactorSieve sieve(1'000'000);
    return sieve;
}

std::uint64_t least_prime_factor(std::uint64_t n) {
    if (n < 2) throw DomainError("least prime factor requires n >= 2");
    const FactorSieve& sieve = FactorSieve::shared();
    if (n <= sieve.limit()) return sieve.smallest_factor(static_cast<std::uint32_t>(n));
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        if (n % p == 0) return p;
    }
    if (is_prime(n)) return n;
    for (std::uint64_t f = 7; f <= n / f; f += 6) {
        if (n % f == 0) return f;
        if (n % (f + 4) == 0) return f + 4;
    }
    return n;
}

Factorization factorize(std::uint64_t n) {
    if (n < 1) throw DomainError("factorize requires n >= 1");
    Factorization out;
    out.n = n;
    while (n > 1) {
        std::uint64_t p = least_prime_factor(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    return out;
}

std::uint64_t Factorization::least_prime() const {
    if (factors.empty()) throw DomainError("least prime factor undefined for n = 1");
    return factors.front().prime;
}

std::uint64_t Factorization::divisor_count() const {
    std::uint64_t count = 1;
    for (const auto& f : factors) count *= f.exponent + 1;
    return count;
}

int mobius(std::uint64_t d) {
    if (d < 1) throw DomainError("mobius requires d >= 1");
    Factorization f = factorize(d);
    for (const auto& pf : f.factors) {
        if (pf.exponent >= 2) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n < 1) throw DomainError("divisors requires n >= 1");
    Factorization f = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (const auto& pf : f.factors) {
        std::size_t existing = divs.size();
        std::uint64_t power = 1;
        for (unsigned e = 1; e <= pf.exponent; ++e) {
            power *= pf.prime;
            for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    if (q < 2) throw DomainError("prime power decomposition requires q >= 2");
    if (is_prime(q)) return {q, 1};
    // q = p^k with k >= 2 forces p = q^(1/k); scanning k downward hits the
    // prime base first when one exists (higher roots of p^k are powers of p).
    for (unsigned k = 63; k >= 2; --k) {
        if (k < 64 && q < (1ull << k)) continue; // root would be below 2
        std::uint64_t approx =
            static_cast<std::uint64_t>(std::pow(static_cast<double>(q), 1.0 / k));
        for (std::uint64_t r = approx > 2 ? approx - 1 : 2; r <= approx + 1; ++r) {
            std::uint64_t acc = 1;
            bool overflow = false;
            for (unsigned i = 0; i < k; ++i) {
                if (acc > q / r) {
                    overflow = true;
                    break;
                }
                acc *= r;
            }
            if (!overflow && acc == q && is_prime(r)) return {r, k};
        }
    }
    throw NotPrimePowerError(q);
}

} // namespace fqcount
