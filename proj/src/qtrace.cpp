#include "sktorus/qtrace.hpp"

namespace sktorus {

IntMat shape_face_matrix(const IdealTriangulationShape& shape) {
    IntMat q(shape.arc_count, IntVec(shape.arc_count, 0));
    for (auto& tri : shape.triangles) {
        int a = tri[0], b = tri[1], c = tri[2];
        q[a][b] += 1; q[b][a] -= 1;
        q[b][c] += 1; q[c][b] -= 1;
        q[c][a] += 1; q[a][c] -= 1;
    }
    return q;
}

TorusPtr chekhov_fock(const IntMat& q, const std::vector<std::string>& names) {
    const int n = static_cast<int>(q.size());
    std::vector<std::vector<int>> u(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i][j] = static_cast<int>(-2 * q[i][j]);
    return QuantumTorus::make(names, std::move(u));
}

void DeltaSimpleKnot::validate(const IdealTriangulationShape& shape) const {
    if (steps.empty()) return;
    std::map<int, int> crossings;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (s.triangle < 0 || s.triangle >= static_cast<int>(shape.triangles.size()))
            throw std::invalid_argument("knot: bad triangle index");
        const auto& tri = shape.triangles[s.triangle];
        auto has = [&](int e) { return tri[0] == e || tri[1] == e || tri[2] == e; };
        if (!has(s.entry) || !has(s.exit) || s.entry == s.exit)
            throw std::invalid_argument("knot: step edges not distinct edges of the triangle");
        const auto& next = steps[(i + 1) % steps.size()];
        if (next.entry != s.exit)
            throw std::invalid_argument("knot: consecutive steps do not share an edge");
        crossings[s.entry]++;
    }
    for (auto& [e, c] : crossings)
        if (c > 1) throw std::invalid_argument("knot: not Delta-simple, edge crossed twice");
}

std::set<int> DeltaSimpleKnot::crossed_edges() const {
    std::set<int> e;
    for (auto& s : steps) {
        e.insert(s.entry);
        e.insert(s.exit);
    }
    return e;
}

std::vector<std::map<int, int>> admissible_colorings(const DeltaSimpleKnot& knot,
                                                     const IdealTriangulationShape& shape) {
    knot.validate(shape);
    auto crossed = knot.crossed_edges();
    std::vector<int> edges(crossed.begin(), crossed.end());
    // Per traversed triangle, the ordered excluded pair (x, y): with u the
    // uncrossed edge, rotate the counterclockwise cycle to (x, u, y).
    std::vector<std::pair<int, int>> excluded;
    for (auto& s : knot.steps) {
        const auto& tri = shape.triangles[s.triangle];
        int u = -1;
        for (int e : tri)
            if (e != s.entry && e != s.exit) u = e;
        if (u < 0) throw std::logic_error("colorings: no uncrossed edge");
        int x = -1, y = -1;
        for (int r = 0; r < 3; ++r)
            if (tri[(r + 1) % 3] == u) {
                x = tri[r];
                y = tri[(r + 2) % 3];
            }
        excluded.emplace_back(x, y);
    }

    std::vector<std::map<int, int>> out;
    const std::size_t n = edges.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::map<int, int> c;
        for (std::size_t i = 0; i < n; ++i) c[edges[i]] = (mask >> i) & 1 ? 1 : -1;
        bool ok = true;
        for (auto& [x, y] : excluded)
            if (c[x] == -1 && c[y] == 1) ok = false;
        if (ok) out.push_back(std::move(c));
    }
    return out;
}

DeltaSimpleKnot ptorus_knot_alpha() {
    DeltaSimpleKnot k;
    k.steps = {{0, 0, 2}, {1, 2, 0}};
    return k;
}

DeltaSimpleKnot ptorus_knot_beta() {
    DeltaSimpleKnot k;
    k.steps = {{0, 1, 2}, {1, 2, 1}};
    return k;
}

DeltaSimpleKnot ptorus_knot_gamma() {
    DeltaSimpleKnot k;
    k.steps = {{0, 0, 1}, {1, 1, 0}};
    return k;
}

}  // namespace sktorus
