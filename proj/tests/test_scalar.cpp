#include <doctest.h>

#include "hsalg/scalar.hpp"

using namespace hsalg;

TEST_CASE("rational arithmetic normalizes") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(-3, 6)).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("7/21") == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational powers and parsing") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("quadratic field arithmetic") {
    // golden-ratio square: ((1+sqrt5)/2)^2 = (3+sqrt5)/2
    Scalar phi(Rational(1, 2), Rational(1, 2), 5);
    Scalar sq = phi * phi;
    CHECK(sq == Scalar(Rational(3, 2), Rational(1, 2), 5));

    Scalar x(Rational(2, 3), Rational(-1, 4), 5);
    CHECK(x * Scalar(1) == x);
    CHECK(x / x == Scalar(1));
    CHECK((x - x).is_zero());
    // conjugation is a field automorphism
    Scalar y(Rational(-1), Rational(2), 5);
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
}

TEST_CASE("field mismatch and squarefree discriminants") {
    Scalar a = Scalar::sqrt_of(5);
    Scalar b = Scalar::sqrt_of(2);
    CHECK_THROWS_AS(a + b, FieldError);
    CHECK_THROWS_AS(Scalar(Rational(0), Rational(1), 4), FieldError);
    CHECK_THROWS_AS(Scalar(Rational(0), Rational(1), 12), FieldError);
    // b = 0 collapses back to the rational subfield, so mixing is fine
    Scalar c(Rational(3), Rational(0), 5);
    CHECK(c.is_rational());
    CHECK(c + b == Scalar(Rational(3), Rational(1), 2));
}

TEST_CASE("scalar printing") {
    CHECK(Scalar(Rational(3, 2), Rational(1, 2), 5).str() == "3/2+1/2*sqrt5");
    CHECK(Scalar(Rational(0), Rational(-1), 5).str() == "-sqrt5");
    CHECK(Scalar(Rational(9), Rational(4), 5).str() == "9+4*sqrt5");
    CHECK(Scalar(Rational(-2)).str() == "-2");
}
