#include "fqcount/inequal.hpp"

#include <stdexcept>

#include "fqcount/errors.hpp"
#include "fqcount/interval.hpp"

namespace fqcount {
namespace {

// Sum of exponent-weighted interval logs of the product's bases.
Interval log_of_product(const PowerProduct& product, unsigned precision_bits) {
    Interval total = Interval::zero(precision_bits);
    for (const auto& [base, exponent] : product) {
        if (base <= 0) throw DomainError("power product base must be positive");
        total = total + Interval::log_of(base, precision_bits).scaled(exponent);
    }
    return total;
}

std::size_t product_bits(const PowerProduct& product) {
    std::size_t bits = 0;
    for (const auto& [base, exponent] : product)
        bits += mpz_sizeinbase(base.get_mpz_t(), 2) * exponent;
    return bits;
}

BigCount evaluate_product(const PowerProduct& product, const Limits& limits) {
    require_bits(product_bits(product) + 64, limits, "exact power comparison");
    BigCount value = 1;
    for (const auto& [base, exponent] : product) {
        BigCount power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), exponent);
        value *= power;
    }
    return value;
}

Verdict decide_exact(const PowerProduct& lhs, const PowerProduct& rhs, const Limits& limits) {
    const BigCount left = evaluate_product(lhs, limits);
    const BigCount right = evaluate_product(rhs, limits);
    const int comparison = cmp(left, right);
    Verdict verdict;
    verdict.holds = comparison > 0;
    verdict.method = DecisionMethod::exact;
    verdict.evidence = ExactEvidence{mpz_sizeinbase(left.get_mpz_t(), 2),
                                     mpz_sizeinbase(right.get_mpz_t(), 2), comparison};
    return verdict;
}

// The deciders work for any integer base >= 2; prime-power validation is a
// front-end concern.
PrimePower checked(const PrimePower& q) {
    if (q.q < 2) throw DomainError("field order must be at least 2");
    return q;
}

} // namespace

PowerOrder certified_power_compare(const PowerProduct& lhs, const PowerProduct& rhs,
                                   unsigned precision_bits) {
    const Interval left = log_of_product(lhs, precision_bits);
    const Interval right = log_of_product(rhs, precision_bits);
    if (right.strictly_below(left)) return PowerOrder::lhs_greater;
    if (left.strictly_below(right)) return PowerOrder::rhs_greater;
    return PowerOrder::indeterminate;
}

Verdict decide_power_greater(const PowerProduct& lhs, const PowerProduct& rhs,
                             const CertifyOptions& options) {
    if (!options.exact_only) {
        for (unsigned bits = options.start_bits; bits <= options.max_bits; bits *= 2) {
            const PowerOrder order = certified_power_compare(lhs, rhs, bits);
            if (order == PowerOrder::indeterminate) continue;
            const Interval left = log_of_product(lhs, bits);
            const Interval right = log_of_product(rhs, bits);
            Verdict verdict;
            verdict.holds = order == PowerOrder::lhs_greater;
            verdict.method = DecisionMethod::certified;
            verdict.evidence = CertifiedEvidence{left.lower_double(), left.upper_double(),
                                                 right.lower_double(), right.upper_double(), bits};
            return verdict;
        }
    }
    return decide_exact(lhs, rhs, options.limits);
}

Verdict root_increasing_from_counts(std::uint64_t n, const BigCount& count_n,
                                    const BigCount& count_n1, const CertifyOptions& options) {
    // N_{n+1}^n > N_n^{n+1}
    return decide_power_greater({{count_n1, static_cast<unsigned long>(n)}},
                                {{count_n, static_cast<unsigned long>(n + 1)}}, options);
}

Verdict root_ratio_decreasing_from_counts(std::uint64_t n, const BigCount& count_n,
                                          const BigCount& count_n1, const BigCount& count_n2,
                                          const CertifyOptions& options) {
    // N_{n+1}^{2n(n+2)} > N_n^{(n+1)(n+2)} * N_{n+2}^{n(n+1)}
    const unsigned long mid = static_cast<unsigned long>(2 * n * (n + 2));
    const unsigned long low = static_cast<unsigned long>((n + 1) * (n + 2));
    const unsigned long high = static_cast<unsigned long>(n * (n + 1));
    return decide_power_greater({{count_n1, mid}}, {{count_n, low}, {count_n2, high}}, options);
}

Verdict ratio_increasing_from_counts(std::uint64_t n, const BigCount& count_n,
                                     const BigCount& count_n1, const BigCount& count_n2,
                                     const CertifyOptions& options) {
    // N_{n+1}^2 < N_n * N_{n+2}, flipped into the shared ">" engine.
    (void)n;
    CertifyOptions exact = options;
    exact.exact_only = true;
    return decide_power_greater({{count_n, 1}, {count_n2, 1}}, {{count_n1, 2}}, exact);
}

Verdict root_increasing_at(std::uint64_t n, const PrimePower& q, const CertifyOptions& options) {
    const PrimePower base = checked(q);
    if (n < 1) throw DomainError("degree must be at least 1");
    const BigCount count_n = irreducible_count(n, base, options.limits);
    const BigCount count_n1 = irreducible_count(n + 1, base, options.limits);
    return root_increasing_from_counts(n, count_n, count_n1, options);
}

Verdict root_ratio_decreasing_at(std::uint64_t n, const PrimePower& q,
                                 const CertifyOptions& options) {
    const PrimePower base = checked(q);
    if (n < 1) throw DomainError("degree must be at least 1");
    const BigCount count_n = irreducible_count(n, base, options.limits);
    const BigCount count_n1 = irreducible_count(n + 1, base, options.limits);
    const BigCount count_n2 = irreducible_count(n + 2, base, options.limits);
    return root_ratio_decreasing_from_counts(n, count_n, count_n1, count_n2, options);
}

Verdict ratio_increasing_at(std::uint64_t n, const PrimePower& q, const CertifyOptions& options) {
    const PrimePower base = checked(q);
    if (n < 1) throw DomainError("degree must be at least 1");
    const BigCount count_n = irreducible_count(n, base, options.limits);
    const BigCount count_n1 = irreducible_count(n + 1, base, options.limits);
    const BigCount count_n2 = irreducible_count(n + 2, base, options.limits);
    return ratio_increasing_from_counts(n, count_n, count_n1, count_n2, options);
}

DeltaValue delta_bounds(std::uint64_t n, const PrimePower& q, unsigned precision_bits) {
    const PrimePower base = checked(q);
    if (n < 1) throw DomainError("degree must be at least 1");
    if (precision_bits < 32) throw DomainError("precision must be at least 32 bits");
    const BigCount count_n = irreducible_count(n, base);
    const BigCount count_n1 = irreducible_count(n + 1, base);
    const BigCount count_n2 = irreducible_count(n + 2, base);

    const Interval mid = Interval::log_of(count_n1, precision_bits).scaled(2).over(
        static_cast<unsigned long>(n + 1));
    const Interval low =
        Interval::log_of(count_n, precision_bits).over(static_cast<unsigned long>(n));
    const Interval high =
        Interval::log_of(count_n2, precision_bits).over(static_cast<unsigned long>(n + 2));
    const Interval delta = mid - low - high;

    DeltaValue value;
    value.n = n;
    value.q = base.q;
    value.lower = delta.lower_rational();
    value.upper = delta.upper_rational();
    return value;
}

} // namespace fqcount
