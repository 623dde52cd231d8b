#include "fqcount/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fqcount/errors.hpp"

namespace fqcount {

const OracleOptions& default_oracle_options() {
    static const OracleOptions options{};
    return options;
}

namespace {

// Monic polynomials of degree d are indexed by their d lower coefficients,
// digit i of the base-q index being the coefficient of x^i.
struct DegreeSpace {
    std::vector<std::uint64_t> qpow; // qpow[d] = q^d = number of monic degree-d polys
};

DegreeSpace make_space(std::uint64_t q, std::uint64_t n_max) {
    DegreeSpace space;
    space.qpow.resize(n_max + 1);
    space.qpow[0] = 1;
    for (std::uint64_t d = 1; d <= n_max; ++d) space.qpow[d] = space.qpow[d - 1] * q;
    return space;
}

void decode_monic(std::uint64_t index, std::uint64_t degree, std::uint64_t q,
                  std::vector<std::uint32_t>& coeffs) {
    coeffs.resize(degree + 1);
    for (std::uint64_t i = 0; i < degree; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    coeffs[degree] = 1;
}

// Per-degree mark bitmaps for every monic polynomial up to degree n_max.
// marked[d][i] is set once a proper factorization of polynomial i is found.
std::vector<std::vector<bool>> sieve_marks(const FieldRep& field, std::uint64_t n_max) {
    const std::uint64_t q = field.order();
    DegreeSpace space = make_space(q, n_max);

    std::vector<std::vector<bool>> marked(n_max + 1);
    for (std::uint64_t d = 1; d <= n_max; ++d) marked[d].assign(space.qpow[d], false);

    std::vector<std::uint32_t> f, g, product;
    for (std::uint64_t d = 1; d <= n_max; ++d) {
        for (std::uint64_t fi = 0; fi < space.qpow[d]; ++fi) {
            if (marked[d][fi]) continue;
            // f is irreducible: every reducible polynomial of this degree has
            // an irreducible factor of lower degree and was marked earlier.
            if (d + 1 > n_max) continue;
            decode_monic(fi, d, q, f);
            for (std::uint64_t e = 1; d + e <= n_max; ++e) {
                auto& marks = marked[d + e];
                for (std::uint64_t gi = 0; gi < space.qpow[e]; ++gi) {
                    decode_monic(gi, e, q, g);
                    product.assign(d + e + 1, 0);
                    for (std::uint64_t i = 0; i <= d; ++i) {
                        if (f[i] == 0) continue;
                        for (std::uint64_t j = 0; j <= e; ++j) {
                            if (g[j] == 0) continue;
                            product[i + j] = field.add(product[i + j], field.mul(f[i], g[j]));
                        }
                    }
                    std::uint64_t pi = 0;
                    for (std::uint64_t i = d + e; i-- > 0;) pi = pi * q + product[i];
                    marks[pi] = true;
                }
            }
        }
    }
    return marked;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k, std::uint64_t cap, const char* what) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > cap / p) throw CapacityError(std::string(what) + " exceeds the configured cap");
        q *= p;
    }
    return q;
}

} // namespace

std::uint32_t FieldRep::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t result = 0;
    std::uint32_t shift = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= static_cast<std::uint32_t>(p_);
        b /= static_cast<std::uint32_t>(p_);
        result += ((da + db) % p_) * shift;
        shift *= static_cast<std::uint32_t>(p_);
    }
    return result;
}

std::uint32_t FieldRep::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t FieldRep::inverse(std::uint32_t a) const {
    if (a == 0) throw DomainError("zero has no multiplicative inverse");
    std::uint64_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
}

namespace {

// Polynomial multiplication mod (modulus, p): the bootstrap path used while
// the log tables are being built.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint64_t p, unsigned k,
                           const std::vector<std::uint32_t>& modulus) {
    std::vector<std::uint32_t> av(k), bv(k), prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        av[i] = a % p;
        a /= static_cast<std::uint32_t>(p);
        bv[i] = b % p;
        b /= static_cast<std::uint32_t>(p);
    }
    for (unsigned i = 0; i < k; ++i) {
        if (av[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(av[i]) * bv[j]) % p);
    }
    // reduce by the monic modulus
    for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
        std::uint32_t lead = prod[deg];
        if (lead != 0) {
            for (unsigned j = 0; j <= k; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * modulus[j] % p;
                prod[deg - k + j] =
                    static_cast<std::uint32_t>((prod[deg - k + j] + p - sub) % p);
            }
        }
        if (deg == k) break;
    }
    std::uint32_t out = 0;
    for (unsigned i = k; i-- > 0;) out = out * static_cast<std::uint32_t>(p) + prod[i];
    return out;
}

} // namespace

FieldRep FieldRep::build(std::uint64_t p, unsigned k, const OracleOptions& options) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime");
    if (k < 1) throw DomainError("extension degree must be at least 1");
    FieldRep field;
    field.p_ = p;
    field.k_ = k;
    field.q_ = checked_pow(p, k, options.max_field_order, "field order p^k");

    if (k == 1) {
        field.modulus_ = {0, 1};
    } else {
        // Recursive bootstrap: sieve over the prime field to locate the
        // lexicographically smallest monic irreducible of degree k.
        FieldRep base = build(p, 1, options);
        auto marks = sieve_marks(base, k);
        std::uint64_t found = marks[k].size();
        for (std::uint64_t i = 0; i < marks[k].size(); ++i) {
            if (!marks[k][i]) {
                found = i;
                break;
            }
        }
        if (found == marks[k].size())
            throw std::logic_error("no irreducible modulus found, sieve is broken");
        std::vector<std::uint32_t> coeffs;
        decode_monic(found, k, p, coeffs);
        field.modulus_ = std::move(coeffs);
    }

    const std::uint64_t q = field.q_;
    // Locate a primitive element: order exactly q-1, checked against the
    // prime factors of q-1 using bootstrap multiplication.
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1) result = poly_mul_mod(result, a, p, k, field.modulus_);
            a = poly_mul_mod(a, a, p, k, field.modulus_);
            e >>= 1;
        }
        return result;
    };
    std::uint32_t generator = 1;
    if (q > 2) {
        Factorization group = factorize(q - 1);
        for (std::uint32_t candidate = 2; candidate < q; ++candidate) {
            bool primitive = true;
            for (const auto& pf : group.factors) {
                if (slow_pow(candidate, (q - 1) / pf.prime) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator = candidate;
                break;
            }
        }
        if (generator == 1) throw std::logic_error("no primitive element found");
    }

    field.exp_.resize(q - 1);
    field.log_.assign(q, 0);
    std::uint32_t value = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        field.exp_[i] = value;
        field.log_[value] = static_cast<std::uint32_t>(i);
        value = poly_mul_mod(value, generator, p, k, field.modulus_);
    }
    if (value != 1) throw std::logic_error("generator order mismatch");

    if (q <= 256) {
        field.add_table_.resize(q * q);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                field.add_table_[a * q + b] =
                    field.add_slow(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }

    if (q <= 64) field.self_check();
    return field;
}

void FieldRep::self_check() const {
    const std::uint64_t q = q_;
    std::vector<std::uint32_t> sample;
    if (q <= 16) {
        for (std::uint64_t a = 0; a < q; ++a) sample.push_back(static_cast<std::uint32_t>(a));
    } else {
        std::minstd_rand rng(12345);
        sample = {0, 1};
        for (int i = 0; i < 14; ++i) sample.push_back(static_cast<std::uint32_t>(rng() % q));
    }
    for (std::uint32_t a : sample) {
        if (pow(a, q) != a) throw std::logic_error("field check failed: a^q != a");
        if (a != 0 && mul(a, inverse(a)) != 1)
            throw std::logic_error("field check failed: missing inverse");
        for (std::uint32_t b : sample) {
            if (mul(a, b) != mul(b, a)) throw std::logic_error("field check failed: commutativity");
            for (std::uint32_t c : sample) {
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::logic_error("field check failed: distributivity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("field check failed: associativity");
            }
        }
    }
}

std::vector<std::uint64_t> sieve_irreducible_counts(const FieldRep& field, std::uint64_t n_max,
                                                    const OracleOptions& options) {
    if (n_max < 1) throw DomainError("sieve requires n_max >= 1");
    checked_pow(field.order(), static_cast<unsigned>(n_max),
                std::uint64_t{1} << options.index_bit_cap, "sieve space q^n_max");
    auto marks = sieve_marks(field, n_max);
    std::vector<std::uint64_t> counts(n_max + 1, 0);
    for (std::uint64_t d = 1; d <= n_max; ++d)
        counts[d] = static_cast<std::uint64_t>(
            std::count(marks[d].begin(), marks[d].end(), false));
    counts.erase(counts.begin());
    return counts;
}

} // namespace fqcount
