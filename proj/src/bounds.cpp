#include "fqcount/bounds.hpp"

#include "fqcount/arith.hpp"
#include "fqcount/errors.hpp"

namespace fqcount {
namespace {

// Bound checks work for any integer base >= 2; prime-power validation is a
// front-end concern.
PrimePower checked(const PrimePower& q, std::uint64_t n, std::uint64_t n_min) {
    if (q.q < 2) throw DomainError("field order must be at least 2");
    if (n < n_min)
        throw DomainError("index must be at least " + std::to_string(n_min));
    return q;
}

BigCount power_of_q(std::uint64_t q, std::uint64_t exponent) {
    BigCount value;
    mpz_ui_pow_ui(value.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(exponent));
    return value;
}

// n*N_n(q) - q^n, the signed gap the bounds are about.
BigCount signed_gap(std::uint64_t n, const PrimePower& q) {
    const BigCount count = irreducible_count(n, q);
    return BigCount(count * n - power_of_q(q.q, n));
}

// P(n) = 32n^3 - 360n^2 + 1276n - 1365; positive from n = 6 on.
BigCount chain_cubic(std::uint64_t n) {
    const BigCount m(static_cast<unsigned long>(n));
    return BigCount(32 * m * m * m - 360 * m * m + 1276 * m - 1365);
}

mpq_class fraction(long num, const BigCount& den) {
    mpq_class value(BigCount(num), den);
    value.canonicalize();
    return value;
}

} // namespace

BigCount error_scale(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 2);
    const std::uint64_t p = least_prime_factor(n);
    const std::uint64_t exponent = n - n / p - 1;
    return BigCount((q.q - 1) * power_of_q(q.q, exponent));
}

GapCheck check_count_gap(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 2);
    const std::uint64_t p = least_prime_factor(n);
    GapCheck result;
    result.lhs = abs(signed_gap(n, q)) * (q.q - 1);
    result.rhs = power_of_q(q.q, n / p + 1);
    result.holds = result.lhs < result.rhs;
    return result;
}

ResidualBound residual(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 2);
    const BigCount gap = signed_gap(n, q);
    const BigCount qn = power_of_q(q.q, n);
    ResidualBound bound;
    bound.n = n;
    bound.q = q.q;
    bound.residual = mpq_class(gap, qn);
    bound.residual.canonicalize();
    bound.scale = error_scale(n, q);
    bound.c_bound_ok = bound.scale * abs(gap) < qn;
    return bound;
}

bool check_log_deviation(std::uint64_t n, const PrimePower& q, unsigned start_bits,
                         unsigned max_bits) {
    checked(q, n, 2);
    const BigCount count = irreducible_count(n, q);
    const BigCount scale = error_scale(n, q);
    for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
        // log N_n - log(q^n / n) = log N_n + log n - n log q
        const Interval deviation =
            (Interval::log_of(count, bits) + Interval::log_of_ui(static_cast<unsigned long>(n), bits) -
             Interval::log_of_ui(static_cast<unsigned long>(q.q), bits).scaled(
                 static_cast<unsigned long>(n)))
                .abs();
        const Interval budget = Interval::ratio(2, scale, bits);
        if (deviation.strictly_below(budget)) return true;
        if (budget.strictly_below(deviation)) return false;
    }
    throw CapacityError("log deviation bound undecided at maximum precision");
}

std::pair<bool, bool> check_cubic_lower(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 5);
    const BigCount scale = error_scale(n, q);
    const BigCount step(static_cast<unsigned long>(q.q - 1));
    const BigCount m(static_cast<unsigned long>(n));
    // cleared by 8: 8(q-1) + 4(n-2)(q-1)^2 + (n-2)(n-4)(q-1)^3
    const BigCount cubic =
        8 * step + 4 * (m - 2) * step * step + (m - 2) * (m - 4) * step * step * step;
    const bool dominates = 8 * scale >= cubic;
    const bool exceeds_square = cubic > (m - 1) * (m - 1);
    return {dominates, exceeds_square};
}

bool check_quartic_lower(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 6);
    const BigCount scale = error_scale(n, q);
    const BigCount step(static_cast<unsigned long>(q.q - 1));
    const BigCount m(static_cast<unsigned long>(n));
    const BigCount step2 = step * step;
    // cleared by 48
    const BigCount quartic = 48 * step + 24 * (m - 2) * step2 +
                             6 * (m * m - 6 * m + 8) * step2 * step +
                             (m * m * m - 12 * m * m + 44 * m - 48) * step2 * step2;
    return 48 * scale >= quartic;
}

Interval delta_floor(std::uint64_t n, const PrimePower& q, unsigned precision_bits) {
    checked(q, n, 2);
    const BigCount m(static_cast<unsigned long>(n));
    const Interval log_term =
        (Interval::log_of_ui(static_cast<unsigned long>(n), precision_bits) -
         Interval::point_ui(1, precision_bits))
            .over(BigCount(m * (m + 1) * (m + 2)));
    const Interval square_term = Interval::ratio(1, BigCount(m * m * (m + 2)), precision_bits);
    const Interval mid_term =
        Interval::ratio(2, BigCount((m + 1) * error_scale(n + 1, q)), precision_bits);
    const Interval low_term = Interval::ratio(1, BigCount(m * error_scale(n, q)), precision_bits);
    const Interval high_term =
        Interval::ratio(1, BigCount((m + 2) * error_scale(n + 2, q)), precision_bits);
    return log_term - square_term - mid_term - low_term - high_term;
}

ChainCheck check_largeq_chain(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 6);
    if (q.q < 9) throw DomainError("large-q chain requires q >= 9");
    ChainCheck result;
    result.floor_ok = 3 * error_scale(n, q) >= 8 * chain_cubic(n);
    // -1/(n+1)^2 + 12/(8P(n+1)) + 6/(8P(n)) + 6/(8P(n+2)) < 0
    const BigCount m(static_cast<unsigned long>(n));
    const mpq_class total = fraction(-1, BigCount((m + 1) * (m + 1))) +
                            fraction(12, BigCount(8 * chain_cubic(n + 1))) +
                            fraction(6, BigCount(8 * chain_cubic(n))) +
                            fraction(6, BigCount(8 * chain_cubic(n + 2)));
    result.final_ok = total < 0;
    return result;
}

ChainCheck check_smallq_chain(std::uint64_t n, const PrimePower& q) {
    checked(q, n, 6);
    if (q.q > 8) throw DomainError("small-q chain requires q <= 8");
    const BigCount m(static_cast<unsigned long>(n));
    const BigCount low_cubic = m * (m * m - 6 * m + 32);
    const BigCount mid_cubic = (m + 1) * (m * m - 4 * m + 27);
    const BigCount high_cubic = (m + 2) * (m * m - 2 * m + 24);
    ChainCheck result;
    result.floor_ok = 48 * error_scale(n, q) >= low_cubic &&
                      48 * error_scale(n + 1, q) >= mid_cubic &&
                      48 * error_scale(n + 2, q) >= high_cubic;
    if (n < 389) {
        // The closing inequality only takes effect from n = 389; the range
        // below is covered by the direct scan.
        result.final_ok = true;
        return result;
    }
    const mpq_class total = fraction(-1, BigCount((m + 1) * (m + 1))) + fraction(192, mid_cubic) +
                            fraction(96, low_cubic) + fraction(96, high_cubic);
    result.final_ok = total < 0;
    return result;
}

} // namespace fqcount
