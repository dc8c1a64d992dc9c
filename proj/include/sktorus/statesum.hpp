#pragma once

#include "sktorus/cheby.hpp"
#include "sktorus/fixtures.hpp"
#include "sktorus/torus.hpp"

namespace sktorus {

/// N x M crossing grid in the 4-marked disk: N parallel strands from W to E
/// (rows, northmost first) over M parallel strands from N to S (columns,
/// westmost first). Rows are stacked above columns unless x_over is false.
struct DiskGridDiagram {
    int rows = 0;
    int cols = 0;
};

/// One smoothing sign per crossing, row-major.
struct GridState {
    int rows = 0, cols = 0;
    std::vector<int> sign;  // +1 or -1
    int at(int i, int j) const { return sign[static_cast<std::size_t>(i) * cols + j]; }
};

enum class ArcClass { a, b, c, d, x, y };

/// Result of smoothing every crossing of a grid: loops plus boundary-to-
/// boundary arcs with their endpoint data (marked point, clockwise fan slot,
/// inherited height rank).
struct ResolvedDiagram {
    struct End {
        int point = 0;   // 0=W, 1=N, 2=E, 3=S
        int slot = 0;    // clockwise fan position at the point
        int height = 0;  // inherited height rank (0 = highest)
    };
    struct Arc {
        End e1, e2;
        bool trivial = false;       // both ends at one marked point
        ArcClass cls = ArcClass::a; // valid when not trivial
    };
    std::vector<Arc> arcs;
    int loops = 0;
    bool has_trivial_arc = false;
};

ResolvedDiagram resolve(const DiskGridDiagram& d, const GridState& s);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline Laurent scalar_from_laurent(const Laurent&, const Laurent& v) { return v; }
inline Cyc scalar_from_laurent(const Cyc& like, const Laurent& v) {
    return specialize(v, like.ctx());
}
}  // namespace detail

/// State-sum evaluator over the Muller torus of the 4-marked disk
/// (generators a, b, c, d, x). The y arc class is carried as the element
/// x^{-1}(q b d + q^{-1} a c).
template <class S>
class DiskStateSum {
public:
    explicit DiskStateSum(S unit) : unit_(std::move(unit)) {
        auto fx = disk4_fixture();
        torus_ = muller_torus(fx.tri);
        for (auto n : {"a", "b", "c", "d", "x"})
            gens_.emplace(n, TorusElement<S>::generator(torus_, unit_, n));
        auto q = TorusElement<S>::scalar(torus_, unit_, unit_).t_shifted(2);
        auto qi = TorusElement<S>::scalar(torus_, unit_, unit_).t_shifted(-2);
        y_value_.emplace(gens_.at("x").pow(-1) *
                         (q * gens_.at("b") * gens_.at("d") + qi * gens_.at("a") * gens_.at("c")));
        loop_factor_ = -(unit_.t_shift(4) + unit_.t_shift(-4));
    }

    const TorusPtr& torus() const { return torus_; }
    const S& unit() const { return unit_; }
    const TorusElement<S>& y_value() const { return *y_value_; }

    /// Scalar weight and arc-class multiset of a fully smoothed state;
    /// zero scalar when a trivial arc is present.
    std::pair<S, std::map<ArcClass, int>> evaluate_state(const DiskGridDiagram& d,
                                                         const GridState& s,
                                                         bool x_over = true) const;

    /// Sum over all states, with DFS pruning of trivial-arc states.
    TorusElement<S> grid_total(int rows, int cols, bool x_over = true,
                               long long budget = default_budget) const;

    static constexpr long long default_budget = 1LL << 25;

private:
    TorusPtr torus_;
    S unit_;
    std::map<std::string, TorusElement<S>> gens_;
    std::optional<TorusElement<S>> y_value_;
    S loop_factor_{};

    TorusElement<S> state_value(const DiskGridDiagram& d, const GridState& s, bool x_over) const;
};

/// x^N y^N = q^{-N^2} a^N c^N sum_j binom(N,j)_{q^4} q^{2j^2} (b d a^{-1} c^{-1})^j,
/// with the one-parameter Gaussian binomial of the Gauss product formula.
template <class S>
TorusElement<S> grid_closed_form(int n, const DiskStateSum<S>& ss) {
    const auto& u = ss.unit();
    auto a = TorusElement<S>::generator(ss.torus(), u, "a");
    auto b = TorusElement<S>::generator(ss.torus(), u, "b");
    auto c = TorusElement<S>::generator(ss.torus(), u, "c");
    auto d = TorusElement<S>::generator(ss.torus(), u, "d");
    auto core = b * d * a.pow(-1) * c.pow(-1);
    TorusElement<S> acc(ss.torus(), u);
    for (int j = 0; j <= n; ++j) {
        Laurent coeff = gaussian_binomial_q4(n, j);
        acc += core.pow(j).scaled(detail::scalar_from_laurent(u, coeff)).t_shifted(4LL * j * j);
    }
    return (a.pow(n) * c.pow(n) * acc).t_shifted(-2LL * n * n);
}

enum class Transparency { transparent, skew, neither };

struct TransparencyReport {
    Transparency verdict = Transparency::neither;
    bool factor_matches = false;  // over-total == xi^{2N} * under-total
    int n = 0;
};

/// Resolve the 1xN configuration (single strand against N parallel arcs) with
/// the strand entirely under, then entirely over; compare the two totals.
TransparencyReport transparency_check(int n, const CycContextPtr& ctx,
                                      long long budget = DiskStateSum<Cyc>::default_budget);

/// T_N(-xi^2 - xi^-2) == -eps^2 - eps^-2, evaluated exactly.
struct TrivialLoopReport {
    bool holds = false;
    Cyc lhs, rhs;
};
TrivialLoopReport trivial_loop_value(const CycContextPtr& ctx);

extern template class DiskStateSum<Laurent>;
extern template class DiskStateSum<Cyc>;

}  // namespace sktorus
