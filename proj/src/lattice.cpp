#include "sktorus/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sktorus {

namespace {

bool row_is_zero(const IntVec& r, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
        if (r[i] != 0) return false;
    return true;
}

}  // namespace

std::vector<IntVec> integer_kernel(const IntMat& m, int cols) {
    const int rows = static_cast<int>(m.size());
    for (auto& r : m)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("integer_kernel: ragged matrix");

    // Work rows: [column j of m | e_j], j = 0..cols-1.
    std::vector<IntVec> w(cols, IntVec(rows + cols, 0));
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) w[j][i] = m[i][j];
        w[j][rows + j] = 1;
    }

    int pivot_row = 0;
    for (int col = 0; col < rows && pivot_row < cols; ++col) {
        // Euclidean elimination in this column among rows >= pivot_row.
        while (true) {
            int best = -1;
            for (int r = pivot_row; r < cols; ++r)
                if (w[r][col] != 0 && (best < 0 || std::llabs(w[r][col]) < std::llabs(w[best][col])))
                    best = r;
            if (best < 0) break;
            std::swap(w[pivot_row], w[best]);
            bool clean = true;
            for (int r = pivot_row + 1; r < cols; ++r) {
                if (w[r][col] == 0) continue;
                long long q = w[r][col] / w[pivot_row][col];
                for (int c = 0; c < rows + cols; ++c) w[r][c] -= q * w[pivot_row][c];
                if (w[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (w[pivot_row][col] != 0) ++pivot_row;
    }

    std::vector<IntVec> basis;
    for (int r = 0; r < cols; ++r) {
        if (!row_is_zero(w[r], rows)) continue;
        IntVec k(w[r].begin() + rows, w[r].end());
        basis.push_back(std::move(k));
    }
    return hermite_basis(std::move(basis));
}

std::vector<IntVec> hermite_basis(std::vector<IntVec> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows[0].size();
    std::size_t pivot = 0;
    for (std::size_t col = 0; col < n && pivot < rows.size(); ++col) {
        while (true) {
            int best = -1;
            for (std::size_t r = pivot; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best < 0 || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = static_cast<int>(r);
            if (best < 0) break;
            std::swap(rows[pivot], rows[best]);
            bool clean = true;
            for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                long long q = rows[r][col] / rows[pivot][col];
                for (std::size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[pivot][c];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[pivot][col] == 0) continue;
        if (rows[pivot][col] < 0)
            for (auto& c : rows[pivot]) c = -c;
        // reduce entries above the pivot
        for (std::size_t r = 0; r < pivot; ++r) {
            long long q = rows[r][col] / rows[pivot][col];
            if (rows[r][col] % rows[pivot][col] != 0 && rows[r][col] < 0) --q;
            for (std::size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[pivot][c];
        }
        ++pivot;
    }
    rows.resize(pivot);
    return rows;
}

bool lattice_contains(const std::vector<IntVec>& basis, const IntVec& v) {
    auto h = hermite_basis(basis);
    IntVec r = v;
    const std::size_t n = r.size();
    for (auto& row : h) {
        std::size_t col = 0;
        while (col < n && row[col] == 0) ++col;
        if (col == n) continue;
        if (r[col] % row[col] != 0) continue;
        long long q = r[col] / row[col];
        for (std::size_t c = 0; c < n; ++c) r[c] -= q * row[c];
    }
    return row_is_zero(r, n);
}

std::vector<IntVec> gamma_lattice(const IntMat& u, long long n) {
    if (n < 1) throw std::invalid_argument("gamma_lattice: N must be >= 1");
    const int p = static_cast<int>(u.size());
    IntMat stacked(p, IntVec(2 * p, 0));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) stacked[i][j] = u[i][j];
        stacked[i][p + i] = n;
    }
    auto ker = integer_kernel(stacked, 2 * p);
    std::vector<IntVec> proj;
    for (auto& k : ker) proj.emplace_back(k.begin(), k.begin() + p);
    return hermite_basis(std::move(proj));
}

}  // namespace sktorus
