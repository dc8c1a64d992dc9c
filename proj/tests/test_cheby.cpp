#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "sktorus/cheby.hpp"
#include "sktorus/fixtures.hpp"

using namespace sktorus;

namespace {
Laurent one() { return Laurent(1); }

// K + K^-1 + E in the 2-generator torus with KE = q^2 EK.
SymbolicElement demoivre_argument() {
    auto t = demoivre_torus();
    return SymbolicElement::monomial(t, one(), {1, 0}, one()) +
           SymbolicElement::monomial(t, one(), {-1, 0}, one()) +
           SymbolicElement::monomial(t, one(), {0, 1}, one());
}
}  // namespace

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_t(0) == IntPolynomial(2));
    CHECK(chebyshev_t(1) == IntPolynomial::z_power(1));
    CHECK(chebyshev_t(2) == IntPolynomial::z_power(2) - IntPolynomial(2));
    // unrolled independently: T_5 = z^5 - 5z^3 + 5z
    CHECK(chebyshev_t(5) == IntPolynomial::z_power(5) - IntPolynomial::z_power(3, 5) +
                                IntPolynomial::z_power(1, 5));
}

TEST_CASE("DeMoivre identity") {
    for (int n = 0; n <= 8; ++n) CHECK(demoivre_check(n));
}

TEST_CASE("c(n,r,j) against brute force at n = 2") {
    auto arg = demoivre_argument();
    auto brute = thread(chebyshev_t(2), arg);
    auto closed = generalized_demoivre(2);
    CHECK(brute == closed);
    // and the two coefficients are what eq-level expansion forces
    CHECK_NOTHROW(cnrj(2, 1, 0));
    CHECK_NOTHROW(cnrj(2, 1, 1));
    CHECK_THROWS(cnrj(2, 2, 0));
}

TEST_CASE("generalized DeMoivre equals direct evaluation for n <= 8") {
    auto arg = demoivre_argument();
    for (int n = 1; n <= 8; ++n) {
        CHECK(generalized_demoivre(n) == thread(chebyshev_t(n), arg));
    }
}

TEST_CASE("c(n,r,j) coefficients are nonnegative for n <= 8") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= n - 1; ++r)
            for (int j = 0; j <= n - r; ++j) CHECK(cnrj(n, r, j).all_coeffs_nonnegative());
}

TEST_CASE("c(n,r,j) vanishes when ord(q^2) = n") {
    // ord(q^2) = ord(t^4) = m / gcd(m, 4)
    for (auto [m, n] : std::vector<std::pair<int, int>>{{12, 3}, {16, 4}, {20, 5}, {8, 2}}) {
        auto ctx = root_data(m);
        REQUIRE(m / std::gcd(m, 4) == n);
        for (int r = 1; r <= n - 1; ++r)
            for (int j = 0; j <= n - r; ++j) CHECK(specialize(cnrj(n, r, j), ctx).is_zero());
    }
}

TEST_CASE("specialized closed form collapses to K^n + K^-n + E^n") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{12, 3}, {16, 4}}) {
        auto ctx = root_data(m);
        Cyc unit(ctx, 1);
        auto t = demoivre_torus();
        auto arg = CycElement::monomial(t, unit, {1, 0}, unit) +
                   CycElement::monomial(t, unit, {-1, 0}, unit) +
                   CycElement::monomial(t, unit, {0, 1}, unit);
        auto value = thread(chebyshev_t(n), arg);
        auto expected = CycElement::monomial(t, unit, {n, 0}, unit) +
                        CycElement::monomial(t, unit, {-n, 0}, unit) +
                        CycElement::monomial(t, unit, {0, n}, unit);
        CHECK(value == expected);
    }
}

TEST_CASE("product identity T_m T_n = T_{m+n} + T_{|m-n|}") {
    auto t = QuantumTorus::make({"X"}, {{0}});
    auto x = SymbolicElement::generator(t, one(), "X");
    auto arg = x + x.pow(-1);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            auto lhs = thread(chebyshev_t(m), arg) * thread(chebyshev_t(n), arg);
            auto rhs = thread(chebyshev_t(m + n), arg) + thread(chebyshev_t(std::abs(m - n)), arg);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("threading") {
    auto t = demoivre_torus();
    auto arg = demoivre_argument();
    CHECK(thread(IntPolynomial::z_power(1), arg) == arg);

    // T_3 of the annulus knot at ord(xi^4) = 3 collapses to X^3 + Y^3 + Y^-3
    auto ctx = root_data(24);
    Cyc unit(ctx, 1);
    auto fx = annulus_fixture();
    auto muller = muller_torus(fx.tri);
    auto alpha = annulus_knot<Cyc>(muller, unit);
    auto t3 = thread(chebyshev_t(3), alpha);
    auto expect = weyl_normalize<Cyc>({{"a", -3}, {"b", -3}, {"c", 3}, {"d", 3}}, muller, unit) +
                  weyl_normalize<Cyc>({{"a", 3}, {"b", -3}}, muller, unit) +
                  weyl_normalize<Cyc>({{"a", -3}, {"b", 3}}, muller, unit);
    CHECK(t3 == expect);
}
