#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>

namespace fqcount {

/// Rigorous enclosure [lo, hi] of a real number. Every operation rounds the
/// lower endpoint toward -inf and the upper endpoint toward +inf, so the
/// true value stays inside through any chain of operations. Widening is the
/// only failure mode; a sign or ordering read off an Interval is certified.
class Interval {
public:
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval zero(mpfr_prec_t prec);
    static Interval point_ui(unsigned long value, mpfr_prec_t prec);

    /// Natural log of an exact integer >= 1.
    static Interval log_of(const mpz_class& value, mpfr_prec_t prec);
    static Interval log_of_ui(unsigned long value, mpfr_prec_t prec);

    /// num / den with den > 0.
    static Interval ratio(unsigned long num, const mpz_class& den, mpfr_prec_t prec);

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;

    /// Multiply by a nonnegative integer.
    Interval scaled(unsigned long factor) const;

    /// Divide by a positive integer.
    Interval over(unsigned long divisor) const;
    Interval over(const mpz_class& divisor) const;

    Interval abs() const;

    /// +1 when the whole enclosure is above zero, -1 when below, 0 otherwise.
    int sign() const;

    /// True when this enclosure lies entirely below the other one.
    bool strictly_below(const Interval& other) const;

    /// Endpoints as doubles, rounded outward (still rigorous bounds).
    double lower_double() const;
    double upper_double() const;

    /// Exact rational values of the endpoints.
    mpq_class lower_rational() const;
    mpq_class upper_rational() const;

    mpfr_prec_t precision() const { return prec_; }

private:
    explicit Interval(mpfr_prec_t prec);

    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

} // namespace fqcount
