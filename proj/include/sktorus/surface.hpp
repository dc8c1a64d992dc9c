#pragma once

#include "sktorus/torus.hpp"

namespace sktorus {

/// Combinatorial quasitriangulation of a marked surface. Edges carry names;
/// each marked point stores its incident half-edges in clockwise fan order.
/// Unmarked boundary components are listed with their monogon edges.
struct Quasitriangulation {
    struct Edge {
        std::string name;
        bool boundary = false;
        bool monogon = false;
    };
    struct HalfEdge {
        std::string edge;
        int end = 0;  // 0 or 1
        bool operator==(const HalfEdge& o) const { return edge == o.edge && end == o.end; }
    };
    struct MarkedPoint {
        std::string name;
        std::vector<HalfEdge> fan;  // clockwise order
    };
    struct UnmarkedComponent {
        std::string name;
        std::string monogon_edge;
    };

    std::vector<Edge> edges;
    std::vector<MarkedPoint> points;
    std::vector<std::array<std::string, 3>> triangles;  // counterclockwise edge order
    std::vector<UnmarkedComponent> holes;
    std::map<std::string, std::string> star_partner;  // monogon edge -> flip partner name

    const Edge& edge(const std::string& name) const;
    bool has_edge(const std::string& name) const;
    int edge_index(const std::string& name) const;
    std::vector<std::string> edge_names() const;

    /// Local consistency: half-edge counts, face incidences, monogon bookkeeping.
    void validate() const;
};

/// Vertex matrix P: P(a,b) = sum over marked points and half-edge pairs of
/// +1 when the a-half-edge is clockwise to the b-half-edge (earlier in the
/// stored fan), -1 otherwise. The sign convention is anchored by the annulus
/// fixture, where P(a,b) = -2.
IntMat vertex_matrix(const Quasitriangulation& t);

/// Same with the opposite orientation convention (for mutation tests).
IntMat vertex_matrix_with_convention(const Quasitriangulation& t, int sign);

/// Face matrix Q = sum over triangles of the 0-extended block with
/// Q(a,b) = Q(b,c) = Q(c,a) = 1 for counterclockwise edges (a,b,c).
/// Rejects quasitriangulations with monogons.
IntMat face_matrix(const Quasitriangulation& t);

/// Muller algebra descriptor: quantum torus on the edges (matrix P, exponents
/// of q) with one trailing central generator per unmarked component.
TorusPtr muller_torus(const Quasitriangulation& t);

/// Flip at an inner edge. Case 1 replaces the diagonal of a quadrilateral,
/// case 2 re-triangulates an eye. The new edge takes the declared star-partner
/// name when the flipped edge is a monogon edge, else name + "*" (or the name
/// with a trailing "*" removed, making flips involutive on names).
Quasitriangulation flip(const Quasitriangulation& t, const std::string& edge);

/// Data of a flip Delta -> Delta' needed by transfer formulas.
struct FlipDescription {
    std::string edge;        // a
    std::string new_edge;    // a*
    bool monogon_case = false;
    // case 1: quad sides (b, c, d, e) cyclically, so Theta(a) = [ce a*^-1] + [bd a*^-1]
    std::array<std::string, 4> quad;
    // case 2: triangle sides b, c and the unmarked component beta
    std::string tri_b, tri_c, beta;
};
FlipDescription describe_flip(const Quasitriangulation& t, const std::string& edge);

/// Image of a generator under the transfer isomorphism Theta_{Delta,Delta'}
/// where after = flip(before, a): identity off a, and on a the two- or
/// three-term sum of the flip formulas.
template <class S>
TorusElement<S> transfer_on_generator(const Quasitriangulation& before,
                                      const Quasitriangulation& after,
                                      const std::string& gen, const S& unit) {
    auto target = muller_torus(after);
    std::string flipped;
    for (auto& e : before.edges)
        if (!after.has_edge(e.name)) {
            if (!flipped.empty()) throw std::invalid_argument("transfer: not a single flip");
            flipped = e.name;
        }
    if (gen != flipped) return TorusElement<S>::generator(target, unit, gen);
    auto d = describe_flip(before, flipped);
    if (!d.monogon_case) {
        auto x = weyl_normalize<S>({{d.quad[1], 1}, {d.quad[3], 1}, {d.new_edge, -1}}, target, unit);
        auto y = weyl_normalize<S>({{d.quad[0], 1}, {d.quad[2], 1}, {d.new_edge, -1}}, target, unit);
        return x + y;
    }
    auto b2 = weyl_normalize<S>({{d.tri_b, 2}, {d.new_edge, -1}}, target, unit);
    auto c2 = weyl_normalize<S>({{d.tri_c, 2}, {d.new_edge, -1}}, target, unit);
    GeneratorWord w{{d.tri_b, 1}, {d.tri_c, 1}, {d.new_edge, -1}, {d.beta, 1}};
    return b2 + c2 + weyl_normalize<S>(w, target, unit);
}

/// Expressions over named generators, for composing transfer/surgery maps.
struct Expr {
    enum class Kind { gen, sum, prod, weyl, int_scalar, t_power };
    Kind kind = Kind::gen;
    std::string name;           // gen
    int power = 1;              // gen
    long long value = 0;        // int_scalar / t_power exponent
    GeneratorWord word;         // weyl
    std::vector<Expr> children; // sum / prod

    static Expr gen(std::string n, int p = 1) {
        Expr e; e.kind = Kind::gen; e.name = std::move(n); e.power = p; return e;
    }
    static Expr sum(std::vector<Expr> xs) {
        Expr e; e.kind = Kind::sum; e.children = std::move(xs); return e;
    }
    static Expr prod(std::vector<Expr> xs) {
        Expr e; e.kind = Kind::prod; e.children = std::move(xs); return e;
    }
    static Expr weyl(GeneratorWord w) {
        Expr e; e.kind = Kind::weyl; e.word = std::move(w); return e;
    }
    static Expr int_scalar(long long v) {
        Expr e; e.kind = Kind::int_scalar; e.value = v; return e;
    }
    static Expr t_power(long long v) {
        Expr e; e.kind = Kind::t_power; e.value = v; return e;
    }
};

/// Evaluate an expression under a generator-image map into a fixed torus.
/// Negative generator powers require the image to be an invertible monomial.
template <class S>
TorusElement<S> eval_expression(const Expr& e,
                                const std::map<std::string, TorusElement<S>>& images,
                                const TorusPtr& target, const S& unit) {
    switch (e.kind) {
        case Expr::Kind::gen: {
            auto it = images.find(e.name);
            if (it == images.end()) throw std::invalid_argument("eval: no image for " + e.name);
            return it->second.pow(e.power);
        }
        case Expr::Kind::sum: {
            TorusElement<S> acc(target, unit);
            for (auto& c : e.children) acc += eval_expression(c, images, target, unit);
            return acc;
        }
        case Expr::Kind::prod: {
            auto acc = TorusElement<S>::scalar(target, unit, unit);
            for (auto& c : e.children) acc *= eval_expression(c, images, target, unit);
            return acc;
        }
        case Expr::Kind::weyl: {
            // [x1 ... xn] with each letter replaced by its image; the images must
            // pairwise q-commute, which holds for monomial images.
            long long corr = 0;
            auto acc = TorusElement<S>::scalar(target, unit, unit);
            std::vector<TorusElement<S>> vals;
            for (auto& [n, p] : e.word) {
                auto it = images.find(n);
                if (it == images.end()) throw std::invalid_argument("eval: no image for " + n);
                vals.push_back(it->second.pow(p));
            }
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (vals[i].term_count() != 1)
                    throw std::invalid_argument("eval: weyl bracket of a non-monomial image");
                for (std::size_t j = i + 1; j < vals.size(); ++j)
                    corr += target->pairing(vals[i].terms().begin()->first,
                                            vals[j].terms().begin()->first);
            }
            for (auto& v : vals) acc *= v;
            return acc.t_shifted(-corr);
        }
        case Expr::Kind::int_scalar:
            return TorusElement<S>::scalar(target, unit, detail::scalar_from_int(unit, e.value));
        case Expr::Kind::t_power: {
            S c = unit;
            detail::scalar_shift(c, e.value);
            return TorusElement<S>::scalar(target, unit, c);
        }
    }
    throw std::logic_error("eval: bad expression");
}

/// Triangle adjacent to a monogon edge, with its two non-monogon sides.
struct MonogonNeighborhood {
    std::string tri_b, tri_c;
    std::string beta;
};
MonogonNeighborhood monogon_neighborhood(const Quasitriangulation& t,
                                         const std::string& monogon_edge);

/// Value of a monogon-edge flip partner a* inside the Muller torus of t:
/// a* = a^{-1} (q^2 b^2 + q^{-2} c^2 + beta b c).
template <class S>
TorusElement<S> star_partner_value(const Quasitriangulation& t, const std::string& monogon_edge,
                                   const S& unit) {
    auto torus = muller_torus(t);
    auto nb = monogon_neighborhood(t, monogon_edge);
    auto a_inv = TorusElement<S>::generator(torus, unit, monogon_edge, -1);
    auto b = TorusElement<S>::generator(torus, unit, nb.tri_b);
    auto c = TorusElement<S>::generator(torus, unit, nb.tri_c);
    auto beta = TorusElement<S>::generator(torus, unit, nb.beta);
    auto rel = (b * b).t_shifted(4) + (c * c).t_shifted(-4) + beta * b * c;
    return a_inv * rel;
}

/// Generator images of the add-a-marked-point-on-a-boundary-edge surgery:
/// every generator of Delta (and star partners) maps to itself in Delta'.
template <class S>
std::map<std::string, TorusElement<S>> surgery_add_point_boundary(
    const Quasitriangulation& before, const Quasitriangulation& after, const S& unit) {
    auto target = muller_torus(after);
    std::map<std::string, TorusElement<S>> images;
    for (auto& e : before.edges)
        images.emplace(e.name, TorusElement<S>::generator(target, unit, e.name));
    for (auto& h : before.holes)
        images.emplace(h.name, TorusElement<S>::generator(target, unit, h.name));
    for (auto& [mon, star] : before.star_partner)
        images.emplace(star, star_partner_value<S>(after, mon, unit));
    return images;
}

/// Generator images of the add-a-marked-point-on-an-unmarked-component surgery.
/// The eye around beta gains edges d, e, f in Delta'; the images are
///   z -> z off {beta, a*},
///   beta -> [d^-1 e] + [a d^-1 e^-1 f] + [d e^-1],
///   a*   -> [a^-1 b^2] + [a^-1 c^2] + [a^-1 b c d^-1 e] + [b c d^-1 e^-1 f]
///           + [a^-1 b c d e^-1].
template <class S>
std::map<std::string, TorusElement<S>> surgery_add_point_unmarked(
    const Quasitriangulation& before, const Quasitriangulation& after, const std::string& beta,
    const std::string& d, const std::string& e, const std::string& f, const S& unit) {
    auto target = muller_torus(after);
    std::string a;
    for (auto& h : before.holes)
        if (h.name == beta) a = h.monogon_edge;
    if (a.empty()) throw std::invalid_argument("surgery: " + beta + " is not unmarked");
    auto nb = monogon_neighborhood(before, a);

    std::map<std::string, TorusElement<S>> images;
    for (auto& ed : before.edges)
        images.emplace(ed.name, TorusElement<S>::generator(target, unit, ed.name));
    for (auto& h : before.holes)
        if (h.name != beta)
            images.emplace(h.name, TorusElement<S>::generator(target, unit, h.name));

    auto w = [&](GeneratorWord word) { return weyl_normalize<S>(word, target, unit); };
    images.emplace(beta, w({{d, -1}, {e, 1}}) + w({{a, 1}, {d, -1}, {e, -1}, {f, 1}}) +
                             w({{d, 1}, {e, -1}}));
    auto star_it = before.star_partner.find(a);
    if (star_it != before.star_partner.end()) {
        const std::string& b = nb.tri_b;
        const std::string& c = nb.tri_c;
        images.emplace(star_it->second,
                       w({{a, -1}, {b, 2}}) + w({{a, -1}, {c, 2}}) +
                           w({{a, -1}, {b, 1}, {c, 1}, {d, -1}, {e, 1}}) +
                           w({{b, 1}, {c, 1}, {d, -1}, {e, -1}, {f, 1}}) +
                           w({{a, -1}, {b, 1}, {c, 1}, {d, 1}, {e, -1}}));
    }
    return images;
}

/// Plug-a-hole surgery: generator images plus the reported kernel generators.
template <class S>
struct PlugResult {
    std::map<std::string, TorusElement<S>> images;
    std::vector<Expr> kernel_generators;  // a, a*, b - c, beta + q^2 + q^-2
    TorusPtr target;
};

template <class S>
PlugResult<S> surgery_plug_hole(const Quasitriangulation& before,
                                const Quasitriangulation& after, const std::string& beta,
                                const S& unit) {
    std::string a;
    for (auto& h : before.holes)
        if (h.name == beta) a = h.monogon_edge;
    if (a.empty()) throw std::invalid_argument("surgery: " + beta + " is not unmarked");
    auto nb = monogon_neighborhood(before, a);
    const std::string& b = nb.tri_b;
    const std::string& c = nb.tri_c;

    PlugResult<S> r;
    r.target = muller_torus(after);
    auto zero = TorusElement<S>(r.target, unit);
    for (auto& ed : before.edges) {
        if (ed.name == a || ed.name == b)
            r.images.emplace(ed.name, ed.name == b ? TorusElement<S>::generator(r.target, unit, c)
                                                   : zero);
        else
            r.images.emplace(ed.name, TorusElement<S>::generator(r.target, unit, ed.name));
    }
    for (auto& h : before.holes) {
        if (h.name == beta) {
            auto q2 = TorusElement<S>::scalar(r.target, unit, unit).t_shifted(4);
            auto qm2 = TorusElement<S>::scalar(r.target, unit, unit).t_shifted(-4);
            r.images.emplace(h.name, -(q2 + qm2));
        } else {
            r.images.emplace(h.name, TorusElement<S>::generator(r.target, unit, h.name));
        }
    }
    auto star_it = before.star_partner.find(a);
    if (star_it != before.star_partner.end()) r.images.emplace(star_it->second, zero);

    r.kernel_generators.push_back(Expr::gen(a));
    if (star_it != before.star_partner.end())
        r.kernel_generators.push_back(Expr::gen(star_it->second));
    r.kernel_generators.push_back(
        Expr::sum({Expr::gen(b), Expr::prod({Expr::int_scalar(-1), Expr::gen(c)})}));
    r.kernel_generators.push_back(Expr::sum(
        {Expr::gen(beta), Expr::t_power(4), Expr::t_power(-4)}));
    return r;
}

}  // namespace sktorus
