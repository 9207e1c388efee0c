#include <doctest.h>

#include "quaddyn/interval.hpp"
#include "quaddyn/rational.hpp"

using namespace quaddyn;

namespace {

Rat random_rat(std::uint64_t& rng) {
    long num = (long)(splitmix64(rng) % 2001) - 1000;
    long den = (long)(splitmix64(rng) % 999) + 1;
    return ratq(num, den);
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact rational recomputation") {
    std::uint64_t rng = 7;
    for (int i = 0; i < 1000; i++) {
        Rat a = random_rat(rng), b = random_rat(rng);
        Interval ia = Interval::from_rational(a), ib = Interval::from_rational(b);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        if (b != 0) CHECK((ia / ib).contains(a / b));
    }
}

TEST_CASE("log and exp are outward-rounded and consistent") {
    Interval four = Interval::from_rational(Rat(4));
    Interval two_log = Interval::log_of_integer(Int(2)).mul_rational(Rat(2));
    CHECK(four.log().lo_d() <= two_log.hi_d());
    CHECK(four.log().hi_d() >= two_log.lo_d());
    // exp(log 4) contains 4
    CHECK(four.log().exp().contains(Rat(4)));
    // sqrt(2)^2 contains 2
    Interval s = Interval::from_rational(Rat(2)).sqrt();
    CHECK((s * s).contains(Rat(2)));
    // rational power: 8^(2/3) = 4 exactly inside
    Interval p = Interval::from_rational(Rat(8)).pow_rational(ratq(2, 3));
    CHECK(p.contains(Rat(4)));
}

TEST_CASE("interval widths shrink with precision") {
    Interval lo = Interval::log_of_rational(ratq(2001, 2000), 32);
    Interval hi = Interval::log_of_rational(ratq(2001, 2000), 256);
    CHECK(hi.width_d() < lo.width_d());
    CHECK(hi.width_d() < 1e-60);
}

TEST_CASE("interval division by interval containing zero throws") {
    Interval a = Interval::from_rational(Rat(1));
    Interval z = Interval::hull(-1.0, 1.0);
    CHECK_THROWS(a / z);
}

TEST_CASE("comparison predicates") {
    Interval a = Interval::hull(1.0, 2.0);
    Interval b = Interval::hull(3.0, 4.0);
    CHECK(a.certainly_lt(b));
    CHECK(!b.certainly_lt(a));
    CHECK(a.certainly_ge(Rat(1)));
    CHECK(a.certainly_le(Rat(2)));
    CHECK(!a.certainly_gt(Rat(1)));
    CHECK(Interval::zero().is_exact_zero());
}
