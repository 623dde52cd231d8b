#include "fqcount/count.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "fqcount/errors.hpp"

namespace fqcount {

PrimePower PrimePower::validate(std::uint64_t q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    auto [p, k] = prime_power_decompose(q);
    return {q, p, k, true};
}

PrimePower PrimePower::permissive(std::uint64_t q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    try {
        return validate(q);
    } catch (const NotPrimePowerError&) {
        return {q, 0, 0, false};
    }
}

const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

void require_bits(std::size_t bits, const Limits& limits, const char* what) {
    if (limits.bit_cap != 0 && bits > limits.bit_cap) {
        throw CapacityError(std::string(what) + " needs ~" + std::to_string(bits) +
                            " bits, above the cap of " + std::to_string(limits.bit_cap));
    }
}

namespace {

mpz_class pow_ui(std::uint64_t base, std::uint64_t exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

// Mobius-formula numerator n * N_n(q); powers[m] must hold q^m.
mpz_class mobius_numerator(std::uint64_t n, const std::vector<mpz_class>& powers) {
    mpz_class sum = 0;
    for (std::uint64_t d : divisors(n)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        if (mu > 0)
            sum += powers[n / d];
        else
            sum -= powers[n / d];
    }
    return sum;
}

mpz_class exact_quotient(const mpz_class& numerator, std::uint64_t n, const char* what) {
    mpz_class quot, rem;
    mpz_tdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(),
                   static_cast<unsigned long>(n));
    if (rem != 0) throw std::logic_error(std::string(what) + ": division not exact");
    return quot;
}

} // namespace

BigCount irreducible_count(std::uint64_t n, const PrimePower& q, const Limits& limits) {
    if (n < 1) throw DomainError("irreducible count requires n >= 1");
    require_bits(static_cast<std::size_t>(n) * std::bit_width(q.q), limits, "q^n");
    std::vector<mpz_class> powers(n + 1);
    for (std::uint64_t d : divisors(n)) powers[n / d] = pow_ui(q.q, n / d);
    mpz_class numerator = mobius_numerator(n, powers);
    BigCount count = exact_quotient(numerator, n, "irreducible count");
    if (count < 1) throw std::logic_error("irreducible count must be positive");
    return count;
}

BigCount closed_form_count(std::uint64_t n, const PrimePower& q) {
    if (n < 1 || n > 7) throw DomainError("closed form available only for degrees 1..7");
    mpz_class x(static_cast<unsigned long>(q.q));
    mpz_class numerator;
    switch (n) {
        case 1: return x;
        case 2: numerator = x * (x - 1); break;
        case 3: numerator = x * (x * x - 1); break;
        case 4: numerator = x * x * (x * x - 1); break;
        case 5: {
            mpz_class x2 = x * x;
            numerator = x * (x2 * x2 - 1);
            break;
        }
        case 6: {
            mpz_class x2 = x * x;
            mpz_class x3 = x2 * x;
            numerator = x3 * x3 - x3 - x2 + x;
            break;
        }
        case 7: {
            mpz_class x3 = x * x * x;
            numerator = x3 * x3 * x - x;
            break;
        }
    }
    return exact_quotient(numerator, n, "closed form count");
}

const BigCount& CountTable::at(std::uint64_t n) const {
    if (n < 1 || n > counts.size()) throw DomainError("count table index out of range");
    return counts[n - 1];
}

CountTable count_table(const PrimePower& q, std::uint64_t n_max, const Limits& limits) {
    if (n_max < 1) throw DomainError("count table requires n_max >= 1");
    require_bits(static_cast<std::size_t>(n_max) * std::bit_width(q.q), limits, "q^n_max");

    std::vector<mpz_class> powers(n_max + 1);
    powers[0] = 1;
    for (std::uint64_t m = 1; m <= n_max; ++m) powers[m] = powers[m - 1] * static_cast<unsigned long>(q.q);

    CountTable table{q, {}};
    table.counts.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        mpz_class numerator = mobius_numerator(n, powers);
        BigCount count = exact_quotient(numerator, n, "count table entry");
        if (count < 1) throw std::logic_error("irreducible count must be positive");
        table.counts.push_back(std::move(count));
    }

    // Clearing identity: sum over d | n of d * N_d(q) recovers q^n.
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        mpz_class sum = 0;
        for (std::uint64_t d : divisors(n))
            sum += static_cast<unsigned long>(d) * table.counts[d - 1];
        if (sum != powers[n]) throw std::logic_error("count table failed the clearing identity");
    }
    return table;
}

} // namespace fqcount
