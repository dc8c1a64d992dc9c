#include <doctest.h>

#include <cstdlib>

#include "sktorus/statesum.hpp"

using namespace sktorus;

namespace {
Laurent one() { return Laurent(1); }

GridState state_of(int rows, int cols, std::vector<int> signs) {
    GridState s;
    s.rows = rows;
    s.cols = cols;
    s.sign = std::move(signs);
    return s;
}
}  // namespace

TEST_CASE("resolving the single crossing") {
    DiskGridDiagram d{1, 1};
    auto plus = resolve(d, state_of(1, 1, {1}));
    REQUIRE(plus.arcs.size() == 2);
    CHECK(!plus.has_trivial_arc);
    CHECK(plus.loops == 0);
    std::set<ArcClass> classes{plus.arcs[0].cls, plus.arcs[1].cls};
    CHECK(classes == std::set<ArcClass>{ArcClass::b, ArcClass::d});

    auto minus = resolve(d, state_of(1, 1, {-1}));
    std::set<ArcClass> mclasses{minus.arcs[0].cls, minus.arcs[1].cls};
    CHECK(mclasses == std::set<ArcClass>{ArcClass::a, ArcClass::c});
}

TEST_CASE("trivial arc detection") {
    // (0,0)=+ then (1,0)=- pinches off an arc with both ends at p_E
    DiskGridDiagram d{2, 1};
    auto r = resolve(d, state_of(2, 1, {1, -1}));
    CHECK(r.has_trivial_arc);

    DiskStateSum<Laurent> ss(one());
    auto [scalar, classes] = ss.evaluate_state(d, state_of(2, 1, {1, -1}));
    CHECK(scalar.is_zero());
}

TEST_CASE("loop detection") {
    DiskGridDiagram d{2, 2};
    auto r = resolve(d, state_of(2, 2, {1, -1, -1, 1}));
    CHECK(r.loops == 1);

    // the loop contributes the factor -(q^2 + q^-2)
    DiskStateSum<Laurent> ss(Laurent(1));
    auto [scalar, classes] = ss.evaluate_state(d, state_of(2, 2, {1, -1, -1, 1}));
    auto factor = -(Laurent::q_power(2) + Laurent::q_power(-2));
    auto quotient = scalar.divide_exact(factor);
    REQUIRE(quotient.has_value());
    CHECK(quotient->term_count() == 1);  // the rest is a single power of q
    (void)classes;

    // the all-positive grid has no loops and no trivial arcs
    for (int n : {2, 3}) {
        DiskGridDiagram dn{n, n};
        GridState s = state_of(n, n, std::vector<int>(n * n, 1));
        auto rn = resolve(dn, s);
        CHECK(rn.loops == 0);
        CHECK(!rn.has_trivial_arc);
    }
}

TEST_CASE("1x1 grid total is the skein relation") {
    DiskStateSum<Laurent> ss(one());
    auto total = ss.grid_total(1, 1);
    auto b = SymbolicElement::generator(ss.torus(), one(), "b");
    auto d = SymbolicElement::generator(ss.torus(), one(), "d");
    auto a = SymbolicElement::generator(ss.torus(), one(), "a");
    auto c = SymbolicElement::generator(ss.torus(), one(), "c");
    auto expect = (b * d).t_shifted(2) + (a * c).t_shifted(-2);
    CHECK(total == expect);
    // which also matches the closed form at N = 1
    CHECK(total == grid_closed_form(1, ss));
}

TEST_CASE("grid totals match the closed form symbolically") {
    DiskStateSum<Laurent> ss(one());
    for (int n : {1, 2, 3}) CHECK(ss.grid_total(n, n) == grid_closed_form(n, ss));
}

TEST_CASE("the forcing rules of the grid proof emerge from trivial-arc detection") {
    // Local forcing: a - crossing immediately followed by a + crossing along a
    // row (west to east) or down a column pinches off a trivial arc. This is
    // the row/column forcing of the inductive proof, transported to this
    // orientation of the grid.
    for (int n : {2, 3}) {
        DiskGridDiagram d{n, n};
        for (int mask = 0; mask < (1 << (n * n)); ++mask) {
            std::vector<int> signs(n * n);
            for (int b = 0; b < n * n; ++b) signs[b] = (mask >> b) & 1 ? 1 : -1;
            GridState s = state_of(n, n, signs);
            bool violates = false;
            for (int j = 0; j + 1 < n; ++j)
                if (s.at(0, j) == -1 && s.at(0, j + 1) == 1) violates = true;
            for (int i = 0; i + 1 < n; ++i)
                if (s.at(i, 0) == -1 && s.at(i + 1, 0) == 1) violates = true;
            if (violates) CHECK(resolve(d, s).has_trivial_arc);
        }
    }

    // The peeling step of the proof holds for the totals:
    // x^n y^n = q^{2n-1} (bd) x^{n-1}y^{n-1} + q^{1-2n} (ac) x^{n-1}y^{n-1}.
    DiskStateSum<Laurent> ss(one());
    auto b = SymbolicElement::generator(ss.torus(), one(), "b");
    auto d4 = SymbolicElement::generator(ss.torus(), one(), "d");
    auto a = SymbolicElement::generator(ss.torus(), one(), "a");
    auto c = SymbolicElement::generator(ss.torus(), one(), "c");
    for (int n : {2, 3}) {
        auto inner = ss.grid_total(n - 1, n - 1);
        auto peeled = ((b * d4) * inner).t_shifted(2 * (2 * n - 1)) +
                      ((a * c) * inner).t_shifted(2 * (1 - 2 * n));
        CHECK(ss.grid_total(n, n) == peeled);
    }
}

TEST_CASE("grid total at a root of unity collapses to two terms") {
    // N = M = 3 at m = 24 (ord(xi^4) = 3): eps^-1 a^3 c^3 + eps b^3 d^3
    auto ctx = root_data(24);
    REQUIRE(ctx->ord_xi4 == 3);
    Cyc unit(ctx, 1);
    DiskStateSum<Cyc> ss(unit);
    auto total = ss.grid_total(3, 3);
    CHECK(total == grid_closed_form(3, ss));

    auto a = CycElement::generator(ss.torus(), unit, "a");
    auto b = CycElement::generator(ss.torus(), unit, "b");
    auto c = CycElement::generator(ss.torus(), unit, "c");
    auto d = CycElement::generator(ss.torus(), unit, "d");
    long long e = ctx->epsilon_exp;  // eps = t^e
    auto expect = (a.pow(3) * c.pow(3)).t_shifted(-e) + (b.pow(3) * d.pow(3)).t_shifted(e);
    CHECK(total == expect);
}

TEST_CASE("evaluate_state reports scalars and classes") {
    DiskStateSum<Laurent> ss(one());
    DiskGridDiagram d{1, 1};
    auto [sp, cp] = ss.evaluate_state(d, state_of(1, 1, {1}));
    CHECK(sp == Laurent::q_power(1));
    CHECK(cp == std::map<ArcClass, int>{{ArcClass::b, 1}, {ArcClass::d, 1}});
    auto [sm, cm] = ss.evaluate_state(d, state_of(1, 1, {-1}));
    CHECK(sm == Laurent::q_power(-1));
    CHECK(cm == std::map<ArcClass, int>{{ArcClass::a, 1}, {ArcClass::c, 1}});
}

TEST_CASE("x and y classes survive in non-square grids") {
    DiskStateSum<Laurent> ss(one());
    // x^2 y = q x b d + q^-1 x a c
    auto total = ss.grid_total(2, 1);
    auto x = SymbolicElement::generator(ss.torus(), one(), "x");
    auto b = SymbolicElement::generator(ss.torus(), one(), "b");
    auto d = SymbolicElement::generator(ss.torus(), one(), "d");
    auto a = SymbolicElement::generator(ss.torus(), one(), "a");
    auto c = SymbolicElement::generator(ss.torus(), one(), "c");
    auto xx = x * x;
    auto direct = xx * ss.y_value();
    CHECK(total == direct);
    (void)b; (void)d; (void)a; (void)c;

    // x y^2 likewise
    CHECK(ss.grid_total(1, 2) == x * ss.y_value() * ss.y_value());
}

TEST_CASE("transparency across small roots") {
    for (int m : {3, 4, 5, 8, 12, 16, 24}) {
        auto ctx = root_data(m);
        int n = ctx->ord_xi4;
        auto rep = transparency_check(n, ctx);
        // xi^{2N} = t^{4N}
        bool is_one = (4LL * n) % m == 0;
        CHECK(rep.factor_matches);
        CHECK(rep.verdict == (is_one ? Transparency::transparent : Transparency::skew));
    }
}

TEST_CASE("trivial loop identity") {
    for (int m : {4, 16, 24}) {
        auto rep = trivial_loop_value(root_data(m));
        CHECK(rep.holds);
    }
    // m = 4: N = 1, both sides are -xi^2 - xi^-2 on the nose
    auto ctx = root_data(4);
    auto rep = trivial_loop_value(ctx);
    CHECK(rep.lhs == -(Cyc::t_power(ctx, 4) + Cyc::t_power(ctx, -4)));
}

TEST_CASE("budget is enforced") {
    DiskStateSum<Laurent> ss(one());
    CHECK_THROWS_AS(ss.grid_total(3, 3, true, 5), BudgetExceeded);
}
