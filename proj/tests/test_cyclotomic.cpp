#include <doctest.h>

#include <numeric>
#include <random>

#include "sktorus/cyclotomic.hpp"

using namespace sktorus;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<long long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("root data") {
    CHECK_THROWS(root_data(0));

    auto c8 = root_data(8);
    CHECK(c8->ord_xi == 4);
    CHECK(c8->ord_xi4 == 1);

    auto c4 = root_data(4);
    CHECK(c4->ord_xi == 2);
    CHECK(c4->ord_xi4 == 1);
    CHECK(c4->epsilon_exp == 2);
    // epsilon = xi = t^2 = -1 at m = 4
    CHECK(Cyc::t_power(c4, c4->epsilon_exp) == -Cyc(c4, 1));

    auto c24 = root_data(24);
    CHECK(c24->ord_xi4 == 3);
    Cyc eps = Cyc::t_power(c24, c24->epsilon_exp);
    CHECK(eps * eps * eps * eps == Cyc(c24, 1));
}

TEST_CASE("epsilon is a fourth root of unity for every m <= 48") {
    for (int m = 1; m <= 48; ++m) {
        auto ctx = root_data(m);
        Cyc eps = Cyc::t_power(ctx, ctx->epsilon_exp);
        CHECK(eps * eps * eps * eps == Cyc(ctx, 1));
    }
}

TEST_CASE("specialization") {
    auto c4 = root_data(4);
    CHECK(specialize(Laurent::q_power(1) - Laurent::q_power(-1), c4).is_zero());

    // [N]_{q^4} = 0 when ord(xi^4) = N
    auto c24 = root_data(24);
    CHECK(specialize(quantum_integer(3).t_scale(4), c24).is_zero());
    CHECK(!specialize(quantum_integer(2).t_scale(4), c24).is_zero());

    // Gauss binomials [N k]_{xi^4} vanish for 0 < k < N
    for (int k = 1; k <= 2; ++k)
        CHECK(specialize(quantum_binomial(3, k, QBase::q4), c24).is_zero());
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(11);
    auto rand_laurent = [&]() {
        Laurent a;
        for (int i = 0; i < 4; ++i)
            a += Laurent::t_power(static_cast<int>(rng() % 17) - 8,
                                  static_cast<long long>(rng() % 9) - 4);
        return a;
    };
    for (int m : {3, 4, 8, 12, 20, 24}) {
        auto ctx = root_data(m);
        for (int trial = 0; trial < 10; ++trial) {
            auto a = rand_laurent();
            auto b = rand_laurent();
            CHECK(specialize(a * b, ctx) == specialize(a, ctx) * specialize(b, ctx));
            CHECK(specialize(a + b, ctx) == specialize(a, ctx) + specialize(b, ctx));
        }
    }
}

TEST_CASE("[n] vanishes exactly when ord(q^2) divides n") {
    // For ord(q^2) = 1 the quantum integer degenerates to +/- n and never
    // vanishes, so the divisibility criterion applies for orders >= 2.
    for (int m = 1; m <= 48; ++m) {
        auto ctx = root_data(m);
        int ord_q2 = m / std::gcd(m, 4);
        for (int n = 1; n <= 12; ++n) {
            bool vanish = specialize(quantum_integer(n), ctx).is_zero();
            CHECK(vanish == (ord_q2 > 1 && n % ord_q2 == 0));
        }
    }
}

TEST_CASE("cyc inverse and reflection") {
    auto ctx = root_data(12);
    Cyc t = Cyc::t_power(ctx, 1);
    CHECK(t * t.reflect() == Cyc(ctx, 1));  // t * t^-1
    Cyc a = Cyc(ctx, 3) + Cyc::t_power(ctx, 5);
    CHECK(a.reflect().reflect() == a);
    CHECK(a.t_shift(7).t_shift(-7) == a);
}
