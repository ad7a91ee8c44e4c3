#include "doctest.h"

#include <cstdint>
#include <vector>

#include "cr/f2matrix.hpp"
#include "cr/gfmatrix.hpp"

using cr::F2Matrix;
using cr::GF2m;
using cr::GFMatrix;

TEST_CASE("bit matrix rank and kernel on a small example") {
    // 3x4 matrix with rank 2, kernel dimension 2.
    F2Matrix a(3, 4);
    a.set(0, 0, 1); a.set(0, 1, 1);
    a.set(1, 1, 1); a.set(1, 2, 1);
    a.set(2, 0, 1); a.set(2, 2, 1);  // row2 = row0 + row1
    CHECK(a.rank() == 2);
    auto ker = a.kernel();
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        auto img = a.apply(v);
        for (bool b : img) CHECK(!b);
    }
}

TEST_CASE("bit matrix kernel agrees with brute force over 6 columns") {
    // Deterministic pseudo-random 5x6 matrices; count kernel vectors by
    // enumerating all 2^6 inputs and compare with 2^(kernel dim).
    std::uint64_t state = 0x243F6A8885A308D3ull;
    for (int trial = 0; trial < 50; ++trial) {
        F2Matrix a(5, 6);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 6; ++c) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                a.set(r, c, (state >> 62) & 1);
            }
        int count = 0;
        for (int bits = 0; bits < 64; ++bits) {
            std::vector<bool> v(6);
            for (int c = 0; c < 6; ++c) v[c] = (bits >> c) & 1;
            auto img = a.apply(v);
            bool zero = true;
            for (bool b : img) zero = zero && !b;
            if (zero) ++count;
        }
        auto ker = a.kernel();
        CHECK((1 << ker.size()) == count);
        CHECK(int(ker.size()) + a.rank() == 6);
    }
}

TEST_CASE("field matrix inverse, determinant, and kernel over GF(4)") {
    GF2m F(2);
    GFMatrix a(&F, 3, 3);
    // Invertible example.
    a.at(0, 0) = 1; a.at(0, 1) = 2;
    a.at(1, 1) = 3; a.at(1, 2) = 1;
    a.at(2, 0) = 1; a.at(2, 2) = 2;
    CHECK(a.rank() == 3);
    CHECK(a.determinant() != 0);
    GFMatrix inv = a.inverse();
    CHECK(a * inv == GFMatrix::identity(&F, 3));
    CHECK(inv * a == GFMatrix::identity(&F, 3));

    // Rank-deficient example: third row = row0 + 2*row1.
    GFMatrix b = a;
    for (int j = 0; j < 3; ++j) b.at(2, j) = F.add(a.at(0, j), F.mul(2, a.at(1, j)));
    CHECK(b.rank() == 2);
    CHECK(b.determinant() == 0);
    auto ker = b.kernel();
    CHECK(ker.size() == 1);
    auto img = b.apply(ker[0]);
    for (auto x : img) CHECK(x == 0);
}

TEST_CASE("field matrix kernel count matches brute force over GF(4)^3") {
    GF2m F(2);
    std::uint64_t state = 0x13198A2E03707344ull;
    for (int trial = 0; trial < 30; ++trial) {
        GFMatrix a(&F, 3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                a.at(r, c) = std::uint32_t((state >> 60) & 3);
            }
        int count = 0;
        for (std::uint32_t x = 0; x < 4; ++x)
            for (std::uint32_t y = 0; y < 4; ++y)
                for (std::uint32_t z = 0; z < 4; ++z) {
                    auto img = a.apply({x, y, z});
                    if (img[0] == 0 && img[1] == 0 && img[2] == 0) ++count;
                }
        auto ker = a.kernel();
        CHECK(count == 1 << (2 * ker.size()));  // |GF(4)|^dim
    }
}
