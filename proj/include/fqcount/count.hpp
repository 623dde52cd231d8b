#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "fqcount/arith.hpp"

namespace fqcount {

/// Exact nonnegative count, arbitrary precision.
using BigCount = mpz_class;

/// A field order q, normally validated as p^k with p prime. Permissive
/// construction admits any integer base >= 2 and leaves validated false
/// (with p = k = 0) when q is not a prime power.
struct PrimePower {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned k = 0;
    bool validated = false;

    /// Requires q = p^k; throws NotPrimePowerError otherwise.
    static PrimePower validate(std::uint64_t q);

    /// Accepts any q >= 2; fills p, k when q happens to be a prime power.
    static PrimePower permissive(std::uint64_t q);

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Resource caps for exact computations. bit_cap bounds the size of any
/// single integer produced; 0 disables the cap.
struct Limits {
    std::size_t bit_cap = std::size_t{1} << 26;
};

const Limits& default_limits();

/// Throws CapacityError when a value of the given bit size would break the cap.
void require_bits(std::size_t bits, const Limits& limits, const char* what);

/// Number of monic irreducible degree-n polynomials over F_q, computed as
/// (1/n) sum over d | n of mobius(d) q^(n/d). The division is checked exact.
BigCount irreducible_count(std::uint64_t n, const PrimePower& q,
                           const Limits& limits = default_limits());

/// The explicit polynomial-in-q forms for degrees 1 through 7.
BigCount closed_form_count(std::uint64_t n, const PrimePower& q);

/// Counts for all degrees 1..n_max at a fixed field order.
struct CountTable {
    PrimePower q;
    std::vector<BigCount> counts; // counts[i] holds the degree-(i+1) count

    const BigCount& at(std::uint64_t n) const;
    std::uint64_t n_max() const { return counts.size(); }
};

/// Builds the table with shared power memoization and verifies the
/// clearing identity sum over d | n of d * counts[d] = q^n for every n.
CountTable count_table(const PrimePower& q, std::uint64_t n_max,
                       const Limits& limits = default_limits());

} // namespace fqcount
