#include <doctest.h>

#include "sktorus/lattice.hpp"

using namespace sktorus;

TEST_CASE("integer kernel basics") {
    IntMat zero(2, IntVec(2, 0));
    auto k0 = integer_kernel(zero, 2);
    CHECK(k0.size() == 2);

    IntMat full{{0, -2}, {2, 0}};
    CHECK(integer_kernel(full, 2).empty());

    // rank-1 matrix: kernel of dimension 1 spanned by (1, -1)
    IntMat r1{{1, 1}, {2, 2}};
    auto k1 = integer_kernel(r1, 2);
    REQUIRE(k1.size() == 1);
    CHECK(lattice_contains(k1, {1, -1}));
    CHECK(lattice_contains(k1, {-3, 3}));
    CHECK(!lattice_contains(k1, {1, 1}));
}

TEST_CASE("kernel vectors satisfy M k = 0") {
    IntMat m{{2, 4, -2, 0}, {1, 1, 1, 1}, {3, 5, -1, 1}};
    auto ker = integer_kernel(m, 4);
    for (auto& k : ker)
        for (auto& row : m) {
            long long s = 0;
            for (int i = 0; i < 4; ++i) s += row[i] * k[i];
            CHECK(s == 0);
        }
    CHECK(ker.size() == 2);
}

TEST_CASE("hermite membership is exact") {
    std::vector<IntVec> basis{{2, 0}, {0, 3}};
    CHECK(lattice_contains(basis, {4, -3}));
    CHECK(!lattice_contains(basis, {1, 0}));
    CHECK(!lattice_contains(basis, {2, 1}));
    CHECK(lattice_contains(basis, {0, 0}));
}

TEST_CASE("gamma lattice") {
    IntMat u{{0, 4}, {-4, 0}};

    // N = 1: the whole lattice
    auto g1 = gamma_lattice(u, 1);
    CHECK(g1.size() == 2);
    CHECK(lattice_contains(g1, {1, 0}));
    CHECK(lattice_contains(g1, {0, 1}));

    // N*k is always in Gamma_N
    for (int n = 1; n <= 4; ++n) {
        auto g = gamma_lattice(u, n);
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) CHECK(lattice_contains(g, {n * a, n * b}));
    }

    // with u as above, <k,e_j> in 2Z means 4k in 2Z: every k qualifies
    auto g2 = gamma_lattice(u, 2);
    CHECK(lattice_contains(g2, {1, 0}));

    // N = 3: need 4k = 0 mod 3, i.e. k = 0 mod 3 in each coordinate
    auto g3 = gamma_lattice(u, 3);
    CHECK(!lattice_contains(g3, {1, 0}));
    CHECK(lattice_contains(g3, {3, 0}));
    CHECK(lattice_contains(g3, {0, 3}));
}

TEST_CASE("gamma lattice with a degenerate pairing") {
    // central direction: zero row stays in every Gamma_N
    IntMat u{{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}};
    auto g4 = gamma_lattice(u, 4);
    CHECK(lattice_contains(g4, {0, 0, 1}));
    CHECK(lattice_contains(g4, {2, 0, 0}));
    CHECK(!lattice_contains(g4, {1, 0, 0}));
}
