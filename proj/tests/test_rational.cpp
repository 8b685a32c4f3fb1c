#include "doctest.h"

#include <sstream>

#include "bgap/rational.hpp"

#include "support/oracles.hpp"

using bgap::Integer;
using bgap::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational().is_zero());
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);

    // Sign always moves to the numerator.
    CHECK(Rational(2, -4).numerator() == -1);
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(-2, -4) == Rational(1, 2));

    CHECK(Rational(0, 17).wire() == "0/1");
    CHECK_THROWS_AS(Rational(1, 0), bgap::DivisionByZero);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational());
    CHECK(Rational(7, 2) / Rational(7, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(), bgap::DivisionByZero);

    // 1/10 has no finite binary expansion; ten of them still sum to 1 exactly.
    Rational acc;
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));
}

TEST_CASE("rational ordering and abs") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(5, 7) > Rational(2, 3));
    CHECK(bgap::abs(Rational(-4, 9)) == Rational(4, 9));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational().sign() == 0);
}

TEST_CASE("rational parse and wire form") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("5").wire() == "5/1");
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("4/-6") == Rational(-2, 3));
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(3).str() == "3");

    CHECK_THROWS_AS(Rational::parse(""), bgap::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), bgap::ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), bgap::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), bgap::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), bgap::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), bgap::ParseError);
}

TEST_CASE("rational to_double and stream output") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-3, 4).to_double() == -0.75);
    std::ostringstream os;
    os << Rational(22, 7);
    CHECK(os.str() == "22/7");
}

TEST_CASE("rational results stay in lowest terms with positive denominator") {
    bgap::testing::Gen gen(20240601);
    for (int iter = 0; iter < 500; ++iter) {
        const Rational a(gen.int_between(-50, 50), gen.int_between(1, 40));
        const Rational b(gen.int_between(-50, 50), gen.int_between(1, 40));
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.denominator() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
            // Round-trips through the wire form.
            CHECK(Rational::parse(r.wire()) == r);
        }
        if (!b.is_zero()) {
            const Rational q = a / b;
            CHECK(q.denominator() > 0);
            CHECK(q * b == a);
        }
    }
}
