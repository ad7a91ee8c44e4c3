#include "doctest.h"

#include "cr/gf2m.hpp"

using cr::GF2m;

TEST_CASE("field axioms hold exhaustively for small degrees") {
    for (int m : {1, 2, 3, 4}) {
        GF2m F(m);
        const std::uint32_t n = F.size();
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                // Frobenius is additive: (a+b)^2 = a^2 + b^2.
                CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
                for (std::uint32_t c = 0; c < n; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                }
            }
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("cube of an order-3 element is the identity in GF(4)") {
    GF2m F(2);
    std::uint32_t b = F.element_of_order(3);
    CHECK(b != 1);
    CHECK(F.pow(b, 3) == 1);
    CHECK(F.mul(F.mul(b, b), b) == 1);
}

TEST_CASE("sqrt is the inverse of squaring over GF(16)") {
    GF2m F(4);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
        CHECK(F.sqrt(F.frobenius(a)) == a);
        CHECK(F.frobenius(F.sqrt(a)) == a);
    }
}

TEST_CASE("moduli are the lexicographically least irreducibles") {
    // Independently known minimal irreducible polynomials of low degree.
    CHECK(GF2m::least_irreducible(1) == 0b10u);        // x
    CHECK(GF2m::least_irreducible(2) == 0b111u);       // x^2+x+1
    CHECK(GF2m::least_irreducible(3) == 0b1011u);      // x^3+x+1
    CHECK(GF2m::least_irreducible(4) == 0b10011u);     // x^4+x+1
    CHECK(GF2m::least_irreducible(8) == 0x11Bu);       // x^8+x^4+x^3+x+1 (AES modulus)
    for (int m = 1; m <= 16; ++m) {
        GF2m F(m);
        CHECK(F.modulus() == GF2m::least_irreducible(m));
    }
}

TEST_CASE("generator has full multiplicative order") {
    for (int m : {2, 3, 4, 8}) {
        GF2m F(m);
        std::uint32_t g = F.generator();
        std::uint32_t x = 1;
        std::uint32_t count = 0;
        do {
            x = F.mul(x, g);
            ++count;
        } while (x != 1);
        CHECK(count == F.size() - 1);
    }
}

TEST_CASE("pow agrees with repeated multiplication, including negative exponents") {
    GF2m F(4);
    for (std::uint32_t a = 1; a < F.size(); ++a) {
        std::uint32_t x = 1;
        for (int e = 0; e <= 20; ++e) {
            CHECK(F.pow(a, e) == x);
            x = F.mul(x, a);
        }
        CHECK(F.pow(a, -1) == F.inv(a));
        CHECK(F.mul(F.pow(a, -7), F.pow(a, 7)) == 1);
    }
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.pow(0, 0) == 1);
}

TEST_CASE("hex serialization round-trips") {
    GF2m F(16);
    for (std::uint32_t a : {0u, 1u, 2u, 0xABCDu, 0xFFFFu}) {
        CHECK(GF2m::from_hex(GF2m::to_hex(a)) == a);
    }
}

TEST_CASE("invalid constructions throw") {
    CHECK_THROWS_AS(GF2m(0), cr::FieldError);
    CHECK_THROWS_AS(GF2m(17), cr::FieldError);
    GF2m F(2);
    CHECK_THROWS_AS(F.inv(0), cr::FieldError);
    CHECK_THROWS_AS(F.element_of_order(5), cr::FieldError);
}
