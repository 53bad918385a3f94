#include "whw/errors.hpp"
#include "whw/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace whw;

TEST_CASE("rational arithmetic") {
    const Field Q = Field::rationals();
    CHECK(Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3") == Scalar::parse(Q, "5/6"));
    CHECK((Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3")).to_string() == "5/6");
    const Scalar x = Scalar::parse(Q, "-7/3");
    CHECK(x * Scalar::one(Q) == x);
    CHECK(Scalar::parse(Q, "4/-6").to_string() == "-2/3");
    CHECK(Scalar::parse(Q, "6/3").to_string() == "2");
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), DivisionByZero);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), ParseError);
}

TEST_CASE("prime field arithmetic") {
    const Field F5 = Field::prime(5);
    CHECK(Scalar::from_int(F5, 3) * Scalar::from_int(F5, 2) == Scalar::one(F5));
    CHECK(Scalar::from_int(F5, -1).to_string() == "4 mod 5");
    CHECK(Scalar::parse(F5, "7 mod 5") == Scalar::from_int(F5, 2));
    CHECK(Scalar::from_int(F5, 2).inverse() == Scalar::from_int(F5, 3));
    CHECK_THROWS_AS(Scalar::parse(F5, "1 mod 7"), FieldMismatch);
    CHECK_THROWS_AS(Scalar::zero(F5).inverse(), DivisionByZero);
    CHECK_THROWS(Field::prime(6));
}

TEST_CASE("mixing fields is an error") {
    CHECK_THROWS_AS(Scalar::one(Field::rationals()) + Scalar::one(Field::prime(3)), FieldMismatch);
    CHECK_THROWS_AS(Scalar::one(Field::prime(5)) * Scalar::one(Field::prime(3)), FieldMismatch);
}

TEST_CASE("field spec text") {
    CHECK(Field::parse("Q").is_rational());
    CHECK(Field::parse("Fp:7").characteristic() == 7);
    CHECK(Field::parse("Fp:7").to_string() == "Fp:7");
    CHECK_THROWS_AS(Field::parse("Fp:x"), ParseError);
    CHECK_THROWS_AS(Field::parse("R"), ParseError);
}

TEST_CASE("char_divides") {
    CHECK_FALSE(char_divides(Field::rationals(), 6));
    CHECK(char_divides(Field::prime(3), 6));
    CHECK_FALSE(char_divides(Field::prime(5), 6));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
    for (const Field f : {Field::rationals(), Field::prime(7), Field::prime(1000003)}) {
        auto draw = [&] {
            if (f.is_rational()) return Scalar::rational(num(rng), den(rng));
            return Scalar::from_int(f, num(rng));
        };
        for (int trial = 0; trial < 200; ++trial) {
            const Scalar a = draw(), b = draw(), c = draw();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Scalar::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}
