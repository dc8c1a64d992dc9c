#include "sktorus/curves.hpp"

namespace sktorus {

namespace {

void check_dim(const EdgeVector& k, const IdealTriangulationShape& shape) {
    if (static_cast<int>(k.size()) != shape.arc_count)
        throw std::invalid_argument("edge vector dimension mismatch");
}

// Enumerate vectors with coordinates in [lo, hi], calling f on each.
template <class F>
void enumerate(int dim, long long lo, long long hi, EdgeVector& cur, const F& f) {
    if (static_cast<int>(cur.size()) == dim) {
        f(cur);
        return;
    }
    for (long long v = lo; v <= hi; ++v) {
        cur.push_back(v);
        enumerate(dim, lo, hi, cur, f);
        cur.pop_back();
    }
}

}  // namespace

bool is_admissible(const EdgeVector& k, const IdealTriangulationShape& shape) {
    check_dim(k, shape);
    for (auto v : k)
        if (v < 0) return false;
    for (auto& tri : shape.triangles) {
        long long a = k[tri[0]], b = k[tri[1]], c = k[tri[2]];
        if ((a + b + c) % 2 != 0) return false;
        if (a > b + c || b > a + c || c > a + b) return false;
    }
    return true;
}

bool cone_membership(const EdgeVector& v, const IdealTriangulationShape& shape) {
    check_dim(v, shape);
    for (auto x : v)
        if (x < 0) return false;
    for (auto& tri : shape.triangles) {
        long long a = v[tri[0]], b = v[tri[1]], c = v[tri[2]];
        if (a > b + c || b > a + c || c > a + b) return false;
    }
    return true;
}

bool in_group_completion(const EdgeVector& k, const IdealTriangulationShape& shape) {
    check_dim(k, shape);
    for (auto& tri : shape.triangles)
        if ((k[tri[0]] + k[tri[1]] + k[tri[2]]) % 2 != 0) return false;
    return true;
}

bool primitivity_check(const IdealTriangulationShape& shape, int bound) {
    bool ok = true;
    EdgeVector cur;
    enumerate(shape.arc_count, -bound, bound, cur, [&](const EdgeVector& k) {
        if (!ok || !in_group_completion(k, shape)) return;
        for (long long c : {2LL, 3LL}) {
            EdgeVector ck(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) ck[i] = c * k[i];
            if (is_admissible(ck, shape) && !is_admissible(k, shape)) ok = false;
        }
    });
    return ok;
}

bool monoid_closure_check(const IdealTriangulationShape& shape, int bound) {
    std::vector<EdgeVector> adm;
    EdgeVector cur;
    enumerate(shape.arc_count, 0, bound, cur, [&](const EdgeVector& k) {
        if (is_admissible(k, shape)) adm.push_back(k);
    });
    for (auto& k : adm)
        for (auto& kp : adm) {
            EdgeVector s(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) s[i] = k[i] + kp[i];
            if (!is_admissible(s, shape)) return false;
        }
    return true;
}

GradedTerm graded_product(const EdgeVector& k, const EdgeVector& kp, const IntMat& c,
                          const IdealTriangulationShape& shape) {
    if (!is_admissible(k, shape) || !is_admissible(kp, shape))
        throw std::invalid_argument("graded_product: inadmissible input");
    GradedTerm r;
    r.exponent.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) r.exponent[i] = k[i] + kp[i];
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < kp.size(); ++j) r.q_exponent += c[i][j] * k[i] * kp[j];
    return r;
}

long long filtration_degree(const std::map<EdgeVector, Laurent>& combination) {
    bool any = false;
    long long deg = 0;
    for (auto& [k, coeff] : combination) {
        if (coeff.is_zero()) continue;
        any = true;
        long long s = 0;
        for (auto v : k) s += v;
        deg = std::max(deg, s);
    }
    if (!any) throw std::invalid_argument("filtration_degree: zero input");
    return deg;
}

}  // namespace sktorus
