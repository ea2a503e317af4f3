#include <doctest.h>

#include "ptri/scalar.hpp"

#include <sstream>

using namespace ptri;

TEST_CASE("rational arithmetic stays reduced") {
    const auto q = RingSpec::rationals();
    const auto a = Scalar::parse(q, "2/4"), b = Scalar::parse(q, "-1/3");
    CHECK((a + b).to_string() == "1/6");
    CHECK((a * b).to_string() == "-1/6");
    CHECK((a / b).to_string() == "-3/2");
    CHECK((-a).to_string() == "-1/2");
    CHECK(a.inverse().to_string() == "2");
    CHECK(Scalar::parse(q, "-6/4").to_string() == "-3/2");
    CHECK(Scalar::parse(q, "\xe2\x88\x92" "5") == Scalar(q, -5L));
}

TEST_CASE("prime field residues") {
    const auto f7 = RingSpec::parse("fp:7");
    CHECK(f7.characteristic() == 7);
    CHECK(Scalar(f7, -1L).to_string() == "6");
    CHECK(Scalar::parse(f7, "1/3") * Scalar(f7, 3L) == Scalar::one(f7));
    CHECK(Scalar(f7, 14L).is_zero());
    for (long x = 1; x < 7; ++x) CHECK((Scalar(f7, x) * Scalar(f7, x).inverse()).is_one());
    CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), InputError);
}

TEST_CASE("field inverses over a larger prime") {
    const auto f = RingSpec::prime_field(1000003);
    for (long x : {2L, 17L, 999999L, -5L}) CHECK((Scalar(f, x) * Scalar(f, x).inverse()).is_one());
}

TEST_CASE("ring spec errors") {
    CHECK_THROWS_AS(RingSpec::parse("fp:8"), InputError);
    CHECK_THROWS_AS(RingSpec::parse("fp:1"), InputError);
    CHECK_THROWS_AS(RingSpec::parse("z"), InputError);
    CHECK(RingSpec::parse("q").is_rational());
    CHECK_THROWS_AS(Scalar::parse(RingSpec::rationals(), "1/0"), InputError);
    CHECK_THROWS_AS(Scalar::parse(RingSpec::rationals(), "abc"), InputError);
    CHECK_THROWS(Scalar::zero(RingSpec::rationals()).inverse());
}

TEST_CASE("mixing rings is rejected") {
    CHECK_THROWS(Scalar(RingSpec::rationals(), 1L) + Scalar(RingSpec::prime_field(5), 1L));
}

TEST_CASE("stream output") {
    std::ostringstream os;
    os << Scalar::parse(RingSpec::rationals(), "-7/21");
    CHECK(os.str() == "-1/3");
}
