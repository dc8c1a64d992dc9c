#include "sktorus/newton.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace sktorus {

namespace {

struct Rat {
    long long n = 0, d = 1;
    Rat() = default;
    Rat(long long nn, long long dd = 1) : n(nn), d(dd) { norm(); }
    void norm() {
        if (d == 0) throw std::logic_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }
    bool is_zero() const { return n == 0; }
    bool negative() const { return n < 0; }
    Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
    Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
    Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
    Rat operator/(const Rat& o) const { return Rat(n * o.d, d * o.n); }
};

// Solve A x = b by rational Gaussian elimination.
// Returns false when inconsistent or underdetermined.
bool solve_unique(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                  std::vector<Rat>& x) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return false;     // inconsistent
    if (r < cols) return false;                // underdetermined
    x.assign(cols, Rat());
    for (std::size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i] / a[i][pivot_col_of_row[i]];
    return true;
}

bool in_hull_of_subset(const LatticePoint& v, const std::vector<LatticePoint>& pts,
                       const std::vector<std::size_t>& subset) {
    const std::size_t dim = v.size();
    const std::size_t s = subset.size();
    // rows: one per coordinate plus the sum-to-one row
    std::vector<std::vector<Rat>> a(dim + 1, std::vector<Rat>(s));
    std::vector<Rat> b(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < s; ++j) a[i][j] = Rat(pts[subset[j]][i]);
        b[i] = Rat(v[i]);
    }
    for (std::size_t j = 0; j < s; ++j) a[dim][j] = Rat(1);
    b[dim] = Rat(1);
    std::vector<Rat> x;
    if (!solve_unique(std::move(a), std::move(b), x)) return false;
    for (auto& lam : x)
        if (lam.negative()) return false;
    return true;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                     std::size_t start, const std::function<bool(const std::vector<std::size_t>&)>& f,
                     bool& done) {
    if (done) return;
    if (cur.size() == k) {
        if (f(cur)) done = true;
        return;
    }
    for (std::size_t i = start; i < n && !done; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, i + 1, f, done);
        cur.pop_back();
    }
}

}  // namespace

bool in_convex_hull(const LatticePoint& v, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    const std::size_t dim = v.size();
    for (auto& p : pts)
        if (p.size() != dim) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    for (auto& p : pts)
        if (p == v) return true;
    // Carathéodory: enough to look at subsets of size <= dim+1.
    for (std::size_t k = 2; k <= dim + 1 && k <= pts.size(); ++k) {
        bool done = false;
        std::vector<std::size_t> cur;
        subsets_of_size(pts.size(), k, cur, 0,
                        [&](const std::vector<std::size_t>& sub) {
                            return in_hull_of_subset(v, pts, sub);
                        },
                        done);
        if (done) return true;
    }
    return false;
}

std::set<LatticePoint> hull_vertices(const std::vector<LatticePoint>& pts) {
    std::set<LatticePoint> uniq(pts.begin(), pts.end());
    std::vector<LatticePoint> all(uniq.begin(), uniq.end());
    std::set<LatticePoint> verts;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<LatticePoint> others;
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != i) others.push_back(all[j]);
        if (!in_convex_hull(all[i], others)) verts.insert(all[i]);
    }
    return verts;
}

std::vector<LatticePoint> minkowski_points(const std::vector<LatticePoint>& a,
                                           const std::vector<LatticePoint>& b) {
    std::set<LatticePoint> out;
    for (auto& p : a)
        for (auto& q : b) {
            LatticePoint s(p.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = p[i] + q[i];
            out.insert(std::move(s));
        }
    return {out.begin(), out.end()};
}

}  // namespace sktorus
