#include <doctest.h>

#include "logpois/errors.hpp"
#include "logpois/scalar.hpp"

using namespace logpois;

TEST_CASE("scalar arithmetic stays in lowest terms") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::rational(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a - a).is_zero());
    CHECK((a / b).str() == "3/2");
}

TEST_CASE("gaussian rational multiplication and division") {
    Scalar i = Scalar::imaginary_unit();
    CHECK((i * i).str() == "-1");
    Scalar z = Scalar::rational(1, 2) + Scalar::rational(1, 3) * i;
    Scalar w = Scalar::rational(-2, 5) + Scalar::rational(1, 1) * i;
    Scalar p = z * w;
    CHECK((p / w) == z);
    CHECK((z * z.conj()).is_real());
    CHECK(Scalar(1) / i == -i);
}

TEST_CASE("scalar text round trip") {
    for (const char *s : {"0", "1/2", "-3", "5/6+1/2*i", "-1/3-2*i", "2*i"}) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    CHECK(Scalar::parse("1/2+1/3*i").str() == "1/2+1/3*i");
    CHECK(Scalar::parse("1/2-1/3*i").str() == "1/2-1/3*i");
}

TEST_CASE("float literals are rejected") {
    CHECK_THROWS_AS(Scalar::parse("0.5"), input_error);
    CHECK_THROWS_AS(Scalar::parse("1e-3"), input_error);
    CHECK_THROWS_AS(Scalar::parse(""), input_error);
    CHECK_THROWS_AS(Scalar::parse("1/2+"), input_error);
}

TEST_CASE("integrality predicates") {
    CHECK(Scalar(3).is_nonneg_integer());
    CHECK(Scalar(0).is_nonneg_integer());
    CHECK(!Scalar(-1).is_nonneg_integer());
    CHECK(Scalar(-1).is_integer());
    CHECK(!Scalar::rational(1, 2).is_integer());
    CHECK(!Scalar::imaginary_unit().is_integer());
}
