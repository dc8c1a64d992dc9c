#include "sktorus/surface.hpp"

#include <algorithm>

namespace sktorus {

const Quasitriangulation::Edge& Quasitriangulation::edge(const std::string& name) const {
    for (auto& e : edges)
        if (e.name == name) return e;
    throw std::invalid_argument("Quasitriangulation: unknown edge " + name);
}

bool Quasitriangulation::has_edge(const std::string& name) const {
    for (auto& e : edges)
        if (e.name == name) return true;
    return false;
}

int Quasitriangulation::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("Quasitriangulation: unknown edge " + name);
}

std::vector<std::string> Quasitriangulation::edge_names() const {
    std::vector<std::string> r;
    for (auto& e : edges) r.push_back(e.name);
    return r;
}

void Quasitriangulation::validate() const {
    // Each edge contributes exactly two half-edges across the fans.
    std::map<std::string, int> half_count;
    std::map<std::string, std::set<int>> ends_seen;
    for (auto& p : points)
        for (auto& h : p.fan) {
            edge(h.edge);
            if (h.end != 0 && h.end != 1)
                throw std::invalid_argument("validate: bad half-edge end index");
            half_count[h.edge]++;
            if (!ends_seen[h.edge].insert(h.end).second)
                throw std::invalid_argument("validate: duplicate half-edge " + h.edge);
        }
    for (auto& e : edges)
        if (half_count[e.name] != 2)
            throw std::invalid_argument("validate: edge " + e.name +
                                        " does not have two half-edges");

    // Face incidences: inner edges lie in two faces, boundary edges in one.
    std::map<std::string, int> face_count;
    for (auto& t : triangles) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw std::invalid_argument("validate: self-folded triangle");
        for (auto& n : t) face_count[edge(n).name]++;
    }
    std::set<std::string> monogon_edges;
    for (auto& h : holes) {
        const auto& e = edge(h.monogon_edge);
        if (!e.monogon)
            throw std::invalid_argument("validate: monogon edge not flagged: " + e.name);
        if (!monogon_edges.insert(h.monogon_edge).second)
            throw std::invalid_argument("validate: shared monogon edge");
        face_count[h.monogon_edge]++;  // the holed monogon face
    }
    for (auto& e : edges) {
        int expect = e.boundary ? 1 : 2;
        if (face_count[e.name] != expect)
            throw std::invalid_argument("validate: face count of " + e.name + " is " +
                                        std::to_string(face_count[e.name]) + ", expected " +
                                        std::to_string(expect));
        if (e.monogon && !monogon_edges.count(e.name))
            throw std::invalid_argument("validate: monogon edge without hole: " + e.name);
    }
}

IntMat vertex_matrix_with_convention(const Quasitriangulation& t, int sign) {
    const int n = static_cast<int>(t.edges.size());
    IntMat p(n, IntVec(n, 0));
    for (auto& pt : t.points) {
        const auto& fan = pt.fan;
        for (std::size_t i = 0; i < fan.size(); ++i)
            for (std::size_t j = i + 1; j < fan.size(); ++j) {
                int a = t.edge_index(fan[i].edge);
                int b = t.edge_index(fan[j].edge);
                if (a == b) continue;  // both half-edges of one edge
                p[a][b] += sign;       // fan[i] is clockwise to fan[j]
                p[b][a] -= sign;
            }
    }
    return p;
}

IntMat vertex_matrix(const Quasitriangulation& t) { return vertex_matrix_with_convention(t, 1); }

IntMat face_matrix(const Quasitriangulation& t) {
    if (!t.holes.empty()) throw std::invalid_argument("face_matrix: monogon present");
    const int n = static_cast<int>(t.edges.size());
    IntMat q(n, IntVec(n, 0));
    for (auto& tri : t.triangles) {
        int a = t.edge_index(tri[0]);
        int b = t.edge_index(tri[1]);
        int c = t.edge_index(tri[2]);
        q[a][b] += 1; q[b][a] -= 1;
        q[b][c] += 1; q[c][b] -= 1;
        q[c][a] += 1; q[a][c] -= 1;
    }
    return q;
}

TorusPtr muller_torus(const Quasitriangulation& t) {
    auto p = vertex_matrix(t);
    std::vector<std::string> names = t.edge_names();
    const int n = static_cast<int>(names.size());
    const int h = static_cast<int>(t.holes.size());
    std::vector<std::vector<int>> u(n + h, std::vector<int>(n + h, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i][j] = static_cast<int>(p[i][j]);
    for (auto& hole : t.holes) names.push_back(hole.name);
    return QuantumTorus::make(std::move(names), std::move(u), h);
}

namespace {

std::string star_name_of(const Quasitriangulation& t, const std::string& edge) {
    auto it = t.star_partner.find(edge);
    if (it != t.star_partner.end()) return it->second;
    if (edge.size() > 1 && edge.back() == '*') return edge.substr(0, edge.size() - 1);
    return edge + "*";
}

// Rotate triangle so that `first` comes first.
std::array<std::string, 3> rotate_to(const std::array<std::string, 3>& tri,
                                     const std::string& first) {
    for (int r = 0; r < 3; ++r)
        if (tri[r] == first) return {tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]};
    throw std::logic_error("rotate_to: edge not in triangle");
}

}  // namespace

FlipDescription describe_flip(const Quasitriangulation& t, const std::string& edge_name) {
    const auto& e = t.edge(edge_name);
    if (e.boundary) throw std::invalid_argument("flip: boundary edge " + edge_name);
    FlipDescription d;
    d.edge = edge_name;
    d.new_edge = star_name_of(t, edge_name);

    std::vector<std::array<std::string, 3>> faces;
    for (auto& tri : t.triangles)
        if (tri[0] == edge_name || tri[1] == edge_name || tri[2] == edge_name)
            faces.push_back(rotate_to(tri, edge_name));

    if (e.monogon) {
        if (faces.size() != 1) throw std::invalid_argument("flip: bad monogon incidence");
        d.monogon_case = true;
        d.tri_b = faces[0][1];
        d.tri_c = faces[0][2];
        for (auto& h : t.holes)
            if (h.monogon_edge == edge_name) d.beta = h.name;
        if (d.beta.empty()) throw std::logic_error("flip: monogon edge without hole");
        return d;
    }
    if (faces.size() != 2) throw std::invalid_argument("flip: edge not in two triangles");
    // Quad sides cyclically (b, c, d, e): tau1 = (a, b, c), tau2 = (a, d, e).
    // When the flipped edge is a loop the gluing reverses the second triangle,
    // so pick the side order whose opposite pairs q-commute consistently:
    // P(c,u) + P(e,u) = P(b,u) + P(d,u) for every other edge u.
    auto p = vertex_matrix(t);
    auto consistent = [&](const std::array<std::string, 4>& quad) {
        int s1 = t.edge_index(quad[0]), s2 = t.edge_index(quad[1]);
        int s3 = t.edge_index(quad[2]), s4 = t.edge_index(quad[3]);
        for (std::size_t u = 0; u < t.edges.size(); ++u) {
            if (static_cast<int>(u) == t.edge_index(edge_name)) continue;
            if (p[s2][u] + p[s4][u] != p[s1][u] + p[s3][u]) return false;
        }
        return true;
    };
    d.quad = {faces[0][1], faces[0][2], faces[1][1], faces[1][2]};
    if (!consistent(d.quad)) {
        std::swap(d.quad[2], d.quad[3]);
        if (!consistent(d.quad)) throw std::logic_error("flip: inconsistent quad pairings");
    }
    return d;
}

namespace {

// Required row P'(a*, u) of the flipped vertex matrix. Each term of the
// transfer image of a must q-commute with every u in Delta \ {a} exactly as a
// does, which forces P'(a*, u) and cross-checks the fixture.
IntVec required_star_row(const Quasitriangulation& t, const FlipDescription& d) {
    auto p = vertex_matrix(t);
    const int n = static_cast<int>(t.edges.size());
    const int ia = t.edge_index(d.edge);
    IntVec row(n, 0);
    for (int u = 0; u < n; ++u) {
        if (u == ia) continue;
        long long v1, v2;
        if (d.monogon_case) {
            int ib = t.edge_index(d.tri_b), ic = t.edge_index(d.tri_c);
            v1 = 2 * p[ib][u] - p[ia][u];
            v2 = 2 * p[ic][u] - p[ia][u];
            long long v3 = p[ib][u] + p[ic][u] - p[ia][u];
            if (v1 != v3) throw std::logic_error("flip: inconsistent monogon pairings");
        } else {
            int s1 = t.edge_index(d.quad[0]), s2 = t.edge_index(d.quad[1]);
            int s3 = t.edge_index(d.quad[2]), s4 = t.edge_index(d.quad[3]);
            v1 = p[s2][u] + p[s4][u] - p[ia][u];
            v2 = p[s1][u] + p[s3][u] - p[ia][u];
        }
        if (v1 != v2) throw std::logic_error("flip: inconsistent quad pairings");
        row[u] = v1;
    }
    return row;
}

bool star_row_matches(const Quasitriangulation& before, const Quasitriangulation& after,
                      const FlipDescription& d, const IntVec& want) {
    auto p = vertex_matrix(after);
    const int is = after.edge_index(d.new_edge);
    for (auto& e : before.edges) {
        if (e.name == d.edge) continue;
        if (p[is][after.edge_index(e.name)] != want[before.edge_index(e.name)]) return false;
    }
    return true;
}

}  // namespace

Quasitriangulation flip(const Quasitriangulation& t, const std::string& edge_name) {
    auto d = describe_flip(t, edge_name);
    IntVec want = required_star_row(t, d);

    Quasitriangulation base = t;

    if (d.monogon_case) {
        for (auto& tri : base.triangles)
            for (auto& n : tri)
                if (n == d.edge) n = d.new_edge;
        for (auto& h : base.holes)
            if (h.monogon_edge == d.edge) h.monogon_edge = d.new_edge;
        base.star_partner.erase(d.edge);
        base.star_partner[d.new_edge] = d.edge;
    } else {
        // New faces (a*, c, d) and (a*, e, b) for quad sides (b, c, d, e).
        std::vector<std::array<std::string, 3>> tris;
        for (auto& tri : base.triangles)
            if (tri[0] != d.edge && tri[1] != d.edge && tri[2] != d.edge) tris.push_back(tri);
        tris.push_back({d.new_edge, d.quad[1], d.quad[2]});
        tris.push_back({d.new_edge, d.quad[3], d.quad[0]});
        base.triangles = std::move(tris);
    }

    for (auto& e : base.edges)
        if (e.name == d.edge) e.name = d.new_edge;

    // Drop the old half-edges; the positions of the new ones are pinned by the
    // transfer-compatibility constraint on the flipped vertex matrix.
    for (auto& pt : base.points) {
        auto& fan = pt.fan;
        fan.erase(std::remove_if(fan.begin(), fan.end(),
                                 [&](const Quasitriangulation::HalfEdge& h) {
                                     return h.edge == d.edge;
                                 }),
                  fan.end());
    }

    if (d.monogon_case) {
        // Both ends are fan-adjacent (the monogon wedge lies between them).
        for (std::size_t pi = 0; pi < base.points.size(); ++pi) {
            auto& fan0 = base.points[pi].fan;
            for (std::size_t i = 0; i <= fan0.size(); ++i) {
                Quasitriangulation cand = base;
                auto& fan = cand.points[pi].fan;
                fan.insert(fan.begin() + static_cast<long>(i),
                           {Quasitriangulation::HalfEdge{d.new_edge, 0},
                            Quasitriangulation::HalfEdge{d.new_edge, 1}});
                if (star_row_matches(t, cand, d, want)) {
                    cand.validate();
                    return cand;
                }
            }
        }
        throw std::logic_error("flip: no placement matches the monogon transfer constraint");
    }

    for (std::size_t pi = 0; pi < base.points.size(); ++pi) {
        for (std::size_t i = 0; i <= base.points[pi].fan.size(); ++i) {
            Quasitriangulation half = base;
            half.points[pi].fan.insert(half.points[pi].fan.begin() + static_cast<long>(i),
                                       Quasitriangulation::HalfEdge{d.new_edge, 0});
            for (std::size_t pj = 0; pj < half.points.size(); ++pj) {
                for (std::size_t j = 0; j <= half.points[pj].fan.size(); ++j) {
                    if (pj == pi && j == i) continue;
                    Quasitriangulation cand = half;
                    cand.points[pj].fan.insert(cand.points[pj].fan.begin() + static_cast<long>(j),
                                               Quasitriangulation::HalfEdge{d.new_edge, 1});
                    if (star_row_matches(t, cand, d, want)) {
                        cand.validate();
                        return cand;
                    }
                }
            }
        }
    }
    throw std::logic_error("flip: no placement matches the transfer constraint");
}

MonogonNeighborhood monogon_neighborhood(const Quasitriangulation& t,
                                         const std::string& monogon_edge) {
    if (!t.edge(monogon_edge).monogon)
        throw std::invalid_argument("monogon_neighborhood: not a monogon edge");
    auto d = describe_flip(t, monogon_edge);
    MonogonNeighborhood nb;
    nb.tri_b = d.tri_b;
    nb.tri_c = d.tri_c;
    nb.beta = d.beta;
    return nb;
}

}  // namespace sktorus
