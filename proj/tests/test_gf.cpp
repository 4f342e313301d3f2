#include <doctest.h>

#include "cycstat/cyclo.hpp"
#include "cycstat/gf.hpp"

using namespace cycstat;

namespace {

// brute-force smallest generator: first element whose powers hit every unit
Fe brute_smallest_generator(const Field& f) {
    for (Fe g = 1; g < f.q(); ++g) {
        std::vector<bool> seen(static_cast<size_t>(f.q()), false);
        Fe x = 1;
        long count = 0;
        do {
            if (!seen[static_cast<size_t>(x)]) {
                seen[static_cast<size_t>(x)] = true;
                ++count;
            }
            x = f.mul(x, g);
        } while (x != 1);
        if (count == f.q() - 1) return g;
    }
    return 0;
}

}  // namespace

TEST_CASE("prime field F_7") {
    Field f = Field::make(7, 1);
    CHECK(f.q() == 7);
    CHECK(f.generator() == 3);  // smallest primitive root of 7
    CHECK(f.generator() == brute_smallest_generator(f));
    CHECK(f.add(5, 4) == 2);
    CHECK(f.mul(5, 4) == 6);
    CHECK(f.inv(3) == 5);
    CHECK(f.pow(3, 6) == 1);
    CHECK(f.neg(0) == 0);
}

TEST_CASE("F_4 has the unique irreducible quadratic as modulus") {
    Field f = Field::make(2, 2);
    CHECK(f.q() == 4);
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});  // X^2 + X + 1
    CHECK(f.generator() == brute_smallest_generator(f));
    // addition is coefficientwise: x + x = 0
    for (Fe a = 0; a < 4; ++a) CHECK(f.add(a, a) == 0);
    // multiplicative group has order 3
    CHECK(f.pow(f.generator(), 3) == 1);
    CHECK(f.pow(f.generator(), 1) != 1);
}

TEST_CASE("F_5 unit group order") {
    Field f = Field::make(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.pow(f.generator(), 4) == 1);
    CHECK(f.pow(f.generator(), 2) != 1);
}

TEST_CASE("log table is a bijection") {
    for (auto [ch, deg] : {std::pair<long, int>{7, 1}, {2, 2}, {7, 2}, {3, 2}}) {
        Field f = Field::make(ch, deg);
        std::vector<bool> seen(static_cast<size_t>(f.q() - 1), false);
        for (Fe x = 1; x < f.q(); ++x) {
            long l = f.log(x);
            REQUIRE(l >= 0);
            REQUIRE(l < f.q() - 1);
            CHECK_FALSE(seen[static_cast<size_t>(l)]);
            seen[static_cast<size_t>(l)] = true;
            CHECK(f.gen_pow(l) == x);
        }
    }
}

TEST_CASE("field axioms hold exhaustively on F_9") {
    Field f = Field::make(3, 2);
    for (Fe a = 0; a < 9; ++a) {
        for (Fe b = 0; b < 9; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sub(f.add(a, b), b) == a);
            if (b != 0) CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
            for (Fe c = 0; c < 9; ++c)
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Field::make(6, 1), FieldError);
    CHECK_THROWS_AS(Field::make(7, 0), FieldError);
    CHECK_THROWS_AS(Field::make(2, 30), FieldError);  // too large
}

TEST_CASE("cubic character of F_7") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    CHECK(chi(0) == MultCharacter::kCharZero);
    CHECK(chi(1) == 0);
    CHECK(chi(f.generator()) == 1);
    CHECK(chi(f.mul(f.generator(), f.generator())) == 2);
    // exactly (q-1)/n = 2 preimages per exponent class
    int count[3] = {0, 0, 0};
    for (Fe x = 1; x < 7; ++x) ++count[chi(x)];
    CHECK(count[0] == 2);
    CHECK(count[1] == 2);
    CHECK(count[2] == 2);
    // multiplicativity on all unit pairs
    for (Fe x = 1; x < 7; ++x)
        for (Fe y = 1; y < 7; ++y)
            CHECK(chi(f.mul(x, y)) == (chi(x) + chi(y)) % 3);
    // cubes are in the kernel
    for (Fe x = 1; x < 7; ++x) CHECK(chi(f.pow(x, 3)) == 0);
}

TEST_CASE("quadratic character of F_7 marks the squares") {
    Field f = Field::make(7, 1);
    MultCharacter chi2 = MultCharacter::make(f, 2);
    // brute-force squares mod 7: {1, 2, 4}
    std::vector<bool> square(7, false);
    for (Fe x = 1; x < 7; ++x) square[static_cast<size_t>(f.mul(x, x))] = true;
    for (Fe x = 1; x < 7; ++x) CHECK((chi2(x) == 0) == square[static_cast<size_t>(x)]);
    CHECK(square[1]);
    CHECK(square[2]);
    CHECK(square[4]);
}

TEST_CASE("full character sum vanishes in Z[zeta]") {
    for (auto [ch, deg, n] : {std::tuple<long, int, int>{7, 1, 3}, {7, 1, 2}, {13, 1, 3}, {2, 2, 3}}) {
        Field f = Field::make(ch, deg);
        MultCharacter chi = MultCharacter::make(f, n);
        Cyclo s(n);
        for (Fe x = 0; x < f.q(); ++x)
            if (chi(x) != MultCharacter::kCharZero) s += Cyclo::root(n, chi(x));
        CHECK(s.is_zero());
    }
}

TEST_CASE("conjugate character negates exponents") {
    Field f = Field::make(7, 1);
    MultCharacter chi = MultCharacter::make(f, 3);
    MultCharacter bar = chi.conjugate();
    for (Fe x = 1; x < 7; ++x) CHECK(bar(x) == (3 - chi(x)) % 3);
    CHECK(bar(0) == MultCharacter::kCharZero);
}

TEST_CASE("character of non-dividing order is rejected") {
    Field f = Field::make(7, 1);
    CHECK_THROWS_AS(MultCharacter::make(f, 5), FieldError);
    Field f4 = Field::make(2, 2);
    CHECK_THROWS_AS(MultCharacter::make(f4, 2), FieldError);  // q-1 = 3 is odd
    CHECK_NOTHROW(MultCharacter::make(f4, 3));
}
