#include "fqcount/interval.hpp"

#include <algorithm>
#include <utility>

#include "fqcount/errors.hpp"

namespace fqcount {

Interval::Interval(mpfr_prec_t prec) : prec_(std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

Interval::Interval(const Interval& other) : Interval(other.prec_) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::zero(mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_zero(out.lo_, 1);
    mpfr_set_zero(out.hi_, 1);
    return out;
}

Interval Interval::point_ui(unsigned long value, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_ui(out.lo_, value, MPFR_RNDD);
    mpfr_set_ui(out.hi_, value, MPFR_RNDU);
    return out;
}

Interval Interval::log_of(const mpz_class& value, mpfr_prec_t prec) {
    if (value < 1) throw DomainError("interval log requires a value >= 1");
    Interval out(prec);
    mpfr_set_z(out.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_log(out.lo_, out.lo_, MPFR_RNDD);
    mpfr_set_z(out.hi_, value.get_mpz_t(), MPFR_RNDU);
    mpfr_log(out.hi_, out.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::log_of_ui(unsigned long value, mpfr_prec_t prec) {
    if (value < 1) throw DomainError("interval log requires a value >= 1");
    Interval out(prec);
    mpfr_set_ui(out.lo_, value, MPFR_RNDD);
    mpfr_log(out.lo_, out.lo_, MPFR_RNDD);
    mpfr_set_ui(out.hi_, value, MPFR_RNDU);
    mpfr_log(out.hi_, out.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::ratio(unsigned long num, const mpz_class& den, mpfr_prec_t prec) {
    if (den <= 0) throw DomainError("interval ratio requires a positive denominator");
    Interval out(prec);
    mpfr_set_ui(out.lo_, num, MPFR_RNDD);
    mpfr_div_z(out.lo_, out.lo_, den.get_mpz_t(), MPFR_RNDD);
    mpfr_set_ui(out.hi_, num, MPFR_RNDU);
    mpfr_div_z(out.hi_, out.hi_, den.get_mpz_t(), MPFR_RNDU);
    return out;
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval out(std::max(prec_, rhs.prec_));
    mpfr_add(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval out(std::max(prec_, rhs.prec_));
    mpfr_sub(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return out;
}

Interval Interval::scaled(unsigned long factor) const {
    Interval out(prec_);
    mpfr_mul_ui(out.lo_, lo_, factor, MPFR_RNDD);
    mpfr_mul_ui(out.hi_, hi_, factor, MPFR_RNDU);
    return out;
}

Interval Interval::over(unsigned long divisor) const {
    if (divisor == 0) throw DomainError("interval division by zero");
    Interval out(prec_);
    mpfr_div_ui(out.lo_, lo_, divisor, MPFR_RNDD);
    mpfr_div_ui(out.hi_, hi_, divisor, MPFR_RNDU);
    return out;
}

Interval Interval::over(const mpz_class& divisor) const {
    if (divisor <= 0) throw DomainError("interval division requires a positive divisor");
    Interval out(prec_);
    mpfr_div_z(out.lo_, lo_, divisor.get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(out.hi_, hi_, divisor.get_mpz_t(), MPFR_RNDU);
    return out;
}

Interval Interval::abs() const {
    Interval out(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_set(out.lo_, lo_, MPFR_RNDD);
        mpfr_set(out.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_neg(out.lo_, hi_, MPFR_RNDD);
        mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(out.lo_, 1);
        mpfr_neg(out.hi_, lo_, MPFR_RNDU);
        if (mpfr_cmp(out.hi_, hi_) < 0) mpfr_set(out.hi_, hi_, MPFR_RNDU);
    }
    return out;
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool Interval::strictly_below(const Interval& other) const {
    return mpfr_cmp(hi_, other.lo_) < 0;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

mpq_class Interval::lower_rational() const {
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), lo_);
    return out;
}

mpq_class Interval::upper_rational() const {
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), hi_);
    return out;
}

} // namespace fqcount
