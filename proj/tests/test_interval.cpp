#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include "fqcount/interval.hpp"

using namespace fqcount;

TEST_CASE("point and zero intervals") {
    const Interval zero = Interval::zero(64);
    CHECK(zero.lower_double() == 0.0);
    CHECK(zero.upper_double() == 0.0);
    CHECK(zero.sign() == 0);

    const Interval five = Interval::point_ui(5, 64);
    CHECK(five.lower_double() == 5.0);
    CHECK(five.upper_double() == 5.0);
    CHECK(five.sign() == 1);
}

TEST_CASE("log enclosures bracket the true value") {
    const Interval log8 = Interval::log_of(mpz_class(8), 128);
    CHECK(log8.lower_double() <= 2.0794415416798357);
    CHECK(log8.upper_double() >= 2.0794415416798357);
    CHECK(log8.lower_double() > 2.079);
    CHECK(log8.upper_double() < 2.08);
    CHECK(log8.sign() == 1);

    const Interval log1 = Interval::log_of_ui(1, 64);
    CHECK(log1.lower_double() <= 0.0);
    CHECK(log1.upper_double() >= 0.0);
}

TEST_CASE("width shrinks as precision grows") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 7, 400);
    const Interval coarse = Interval::log_of(big, 64);
    const Interval fine = Interval::log_of(big, 512);
    const mpq_class coarse_width = coarse.upper_rational() - coarse.lower_rational();
    const mpq_class fine_width = fine.upper_rational() - fine.lower_rational();
    CHECK(fine_width < coarse_width);
    CHECK(fine_width > 0);
}

TEST_CASE("sum and difference round outward") {
    const Interval a = Interval::log_of_ui(3, 64);
    const Interval b = Interval::log_of_ui(5, 64);
    const Interval sum = a + b;
    // log 3 + log 5 = log 15
    const Interval log15 = Interval::log_of_ui(15, 256);
    CHECK(sum.lower_rational() <= log15.upper_rational());
    CHECK(sum.upper_rational() >= log15.lower_rational());

    const Interval diff = a - a;
    CHECK(diff.sign() == 0);
    CHECK(diff.lower_double() <= 0.0);
    CHECK(diff.upper_double() >= 0.0);
}

TEST_CASE("scaling and division") {
    const Interval log2 = Interval::log_of_ui(2, 128);
    const Interval log8 = Interval::log_of_ui(8, 128);
    const Interval tripled = log2.scaled(3);
    // 3 log 2 = log 8: the enclosures must overlap, neither strictly below
    CHECK_FALSE(tripled.strictly_below(log8));
    CHECK_FALSE(log8.strictly_below(tripled));

    const Interval halved = log8.over(2UL);
    CHECK(halved.lower_double() < 1.0398);
    CHECK(halved.upper_double() > 1.0397);

    const Interval third = Interval::ratio(1, mpz_class(3), 128);
    CHECK(third.lower_double() < 1.0 / 3.0 + 1e-15);
    CHECK(third.upper_double() > 1.0 / 3.0 - 1e-15);
    CHECK(third.sign() == 1);

    const Interval big_div = Interval::point_ui(10, 128).over(mpz_class(4));
    CHECK(big_div.lower_double() <= 2.5);
    CHECK(big_div.upper_double() >= 2.5);
}

TEST_CASE("absolute value cases") {
    const Interval pos = Interval::log_of_ui(3, 64);
    CHECK(pos.abs().lower_double() == pos.lower_double());

    const Interval neg = Interval::zero(64) - Interval::log_of_ui(3, 64);
    CHECK(neg.sign() == -1);
    const Interval neg_abs = neg.abs();
    CHECK(neg_abs.sign() == 1);
    CHECK(neg_abs.upper_double() >= 1.0986);

    const Interval straddle = Interval::log_of_ui(2, 64) - Interval::log_of_ui(2, 64);
    const Interval straddle_abs = straddle.abs();
    CHECK(straddle_abs.lower_double() >= 0.0);
    CHECK(straddle_abs.sign() >= 0);
}

TEST_CASE("strict ordering requires disjoint enclosures") {
    const Interval log8 = Interval::log_of_ui(8, 128);
    const Interval log9 = Interval::log_of_ui(9, 128);
    CHECK(log8.strictly_below(log9));
    CHECK_FALSE(log9.strictly_below(log8));
    CHECK_FALSE(log8.strictly_below(log8));
}

TEST_CASE("rational endpoints are exact and bracket the double view") {
    const Interval value = Interval::log_of_ui(7, 64);
    CHECK(value.lower_rational() <= value.upper_rational());
    CHECK(mpq_class(value.lower_double()) <= value.lower_rational());
    CHECK(mpq_class(value.upper_double()) >= value.upper_rational());
}

TEST_CASE("precision is recorded") {
    CHECK(Interval::zero(96).precision() == 96);
    CHECK(Interval::log_of_ui(2, 256).precision() == 256);
}
