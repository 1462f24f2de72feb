#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/cyclotomic.hpp"

using namespace qd;

TEST_CASE("cyclotomic polynomial cache") {
    CHECK(Cyclotomic::cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(Cyclotomic::cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("basic relations") {
    auto z3 = Cyclotomic::root_of_unity(3);
    CHECK(z3 + z3 * z3 == Cyclotomic(-1)); // 1 + z + z^2 = 0
    auto z4 = Cyclotomic::root_of_unity(4);
    CHECK(z4 * z4 == Cyclotomic(-1));
    auto z5 = Cyclotomic::root_of_unity(5);
    CHECK(z5.conjugate() == Cyclotomic::root_of_unity(5, 4));
    CHECK(z3 * z3 * z3 == Cyclotomic(1));
}

TEST_CASE("conductor unification") {
    auto z2 = Cyclotomic::root_of_unity(2); // = -1
    CHECK(z2 == Cyclotomic(-1));
    auto z6 = Cyclotomic::root_of_unity(6);
    auto z3 = Cyclotomic::root_of_unity(3);
    CHECK(z6 * z6 == z3);
    CHECK(z3 + z2 == z3 - Cyclotomic(1));
    // zeta_6 = -zeta_3^2
    CHECK(z6 == -(z3 * z3));
}

TEST_CASE("rationality predicates") {
    auto z8 = Cyclotomic::root_of_unity(8);
    CHECK(!z8.is_rational());
    CHECK((z8 * z8.conjugate()).is_rational_integer());
    CHECK((z8 * z8.conjugate()).rational_value() == 1);
    Cyclotomic half(Rational(1, 2));
    CHECK(half.is_rational());
    CHECK(!half.is_rational_integer());
    CHECK(Cyclotomic().is_zero());
}

TEST_CASE("galois and conjugate") {
    auto z7 = Cyclotomic::root_of_unity(7);
    CHECK(z7.galois(2) == z7 * z7);
    CHECK(z7.galois(1) == z7);
    CHECK_THROWS(Cyclotomic::root_of_unity(6).galois(2));
    // sum over a Galois orbit is rational: z5 + z5^2 + z5^3 + z5^4 = -1
    auto z5 = Cyclotomic::root_of_unity(5);
    auto s = z5 + z5.galois(2) + z5.galois(3) + z5.galois(4);
    CHECK(s == Cyclotomic(-1));
}

TEST_CASE("deterministic compare and printing") {
    auto z3 = Cyclotomic::root_of_unity(3);
    CHECK(Cyclotomic::compare(z3, z3) == 0);
    CHECK(Cyclotomic::compare(Cyclotomic(0), Cyclotomic(1)) < 0);
    CHECK(Cyclotomic(Rational(3, 2)).str() == "3/2");
    CHECK(z3.str() == "z3");
    CHECK((z3 * Rational(2) + Cyclotomic(1)).str() == "1+2*z3");
}

TEST_CASE("arithmetic is exact field arithmetic") {
    // (1 + z5)(1 + z5^4) = 1 + z5 + z5^4 + 1 = 2 + (z5 + z5^4)
    auto z5 = Cyclotomic::root_of_unity(5);
    auto lhs = (Cyclotomic(1) + z5) * (Cyclotomic(1) + z5.galois(4));
    auto rhs = Cyclotomic(2) + z5 + z5.galois(4);
    CHECK(lhs == rhs);
    // norm of 1 + z3 is 1: (1+z3)(1+z3^2) = 1 + z3 + z3^2 + 1 = 1
    auto z3 = Cyclotomic::root_of_unity(3);
    CHECK((Cyclotomic(1) + z3) * (Cyclotomic(1) + z3 * z3) == Cyclotomic(1));
}
