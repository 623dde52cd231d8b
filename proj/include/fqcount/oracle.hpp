#pragma once

#include <cstdint>
#include <vector>

#include "fqcount/count.hpp"

namespace fqcount {

/// Caps for the brute-force sieve. index_bit_cap bounds the enumeration
/// space: q^n_max <= 2^index_bit_cap. max_field_order bounds field
/// construction itself.
struct OracleOptions {
    unsigned index_bit_cap = 22;
    std::uint64_t max_field_order = 4096;
};

const OracleOptions& default_oracle_options();

/// Explicit model of F_{p^k}. Elements are integers in [0, p^k) read as
/// base-p coefficient vectors, constant term in the least significant digit.
/// Multiplication goes through discrete log/antilog tables built from a
/// primitive element; the reducing modulus is the lexicographically smallest
/// monic irreducible of degree k over F_p (the polynomial x when k = 1).
class FieldRep {
public:
    static FieldRep build(std::uint64_t p, unsigned k,
                          const OracleOptions& options = default_oracle_options());

    std::uint64_t order() const { return q_; }
    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }

    /// Coefficients of the reducing modulus over F_p, length degree()+1,
    /// leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_slow(a, b);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Multiplicative inverse of a nonzero element.
    std::uint32_t inverse(std::uint32_t a) const;

    /// Field-axiom verification: commutativity, associativity,
    /// distributivity, a^q = a, and existence of inverses. Exhaustive for
    /// order <= 16, sampled otherwise. Throws std::logic_error on failure.
    void self_check() const;

private:
    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i for a primitive g, length q-1
    std::vector<std::uint32_t> log_;  // inverse of exp_, log_[0] unused
    std::vector<std::uint32_t> add_table_;

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
};

/// Counts monic irreducible polynomials of each degree 1..n_max over the
/// field by an Eratosthenes-style sieve: walk monic polynomials by ascending
/// degree, and for each unmarked (hence irreducible) one mark every monic
/// multiple up to degree n_max. Independent of the Mobius formula. Entry i
/// of the returned vector holds the degree-(i+1) count.
std::vector<std::uint64_t> sieve_irreducible_counts(
    const FieldRep& field, std::uint64_t n_max,
    const OracleOptions& options = default_oracle_options());

} // namespace fqcount
