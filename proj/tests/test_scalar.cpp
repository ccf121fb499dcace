#include <doctest.h>

#include "casilab/scalar.hpp"

using namespace casilab;

TEST_CASE("gaussian rational arithmetic is exact and canonical") {
    Scalar a(1, 2), b(1, 3);
    CHECK((a + b) == Scalar(5, 6));
    CHECK((a - b) == Scalar(1, 6));
    CHECK((a * b) == Scalar(1, 6));
    CHECK((a / b) == Scalar(3, 2));
    CHECK((-a) == Scalar(-1, 2));

    Scalar i = Scalar::i();
    CHECK((i * i) == Scalar(-1));
    Scalar z(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK(z.conj() == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
    CHECK((z * z.conj()).is_real());
    CHECK((z / z) == Scalar(1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), domain_error);
}

TEST_CASE("parsing accepts the documented forms") {
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("-3/4") == Scalar(-3, 4));
    CHECK(Scalar::parse("2/4") == Scalar(1, 2));
    CHECK(Scalar::parse("1/2+1/3 i") == Scalar(mpq_class(1, 2), mpq_class(1, 3)));
    CHECK(Scalar::parse("1/2-1/3 i") == Scalar(mpq_class(1, 2), mpq_class(-1, 3)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == Scalar(mpq_class(0), mpq_class(-1)));
    CHECK(Scalar::parse("3/4 i") == Scalar(mpq_class(0), mpq_class(3, 4)));
    CHECK(Scalar::parse(" 0 ") == Scalar(0));
}

TEST_CASE("parse errors carry position information") {
    CHECK_THROWS_AS(Scalar::parse(""), parse_error);
    CHECK_THROWS_AS(Scalar::parse("1/"), parse_error);
    CHECK_THROWS_AS(Scalar::parse("1+2"), parse_error);
    CHECK_THROWS_AS(Scalar::parse("x"), parse_error);
    CHECK_THROWS_AS(Scalar::parse("1/2 3"), parse_error);
}

TEST_CASE("print-parse round trip is the identity") {
    const Scalar samples[] = {Scalar(0),
                              Scalar(-7),
                              Scalar(22, 7),
                              Scalar::i(),
                              Scalar(mpq_class(-2, 9), mpq_class(5, 3)),
                              Scalar(mpq_class(1), mpq_class(-1))};
    for (const Scalar& s : samples) CHECK(Scalar::parse(s.str()) == s);
}
