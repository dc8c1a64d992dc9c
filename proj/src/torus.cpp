#include "sktorus/torus.hpp"

namespace sktorus {

std::shared_ptr<const QuantumTorus> QuantumTorus::make(std::vector<std::string> names,
                                                       std::vector<std::vector<int>> u,
                                                       int central) {
    auto t = std::make_shared<QuantumTorus>();
    const int n = static_cast<int>(names.size());
    if (central < 0 || central > n) throw std::invalid_argument("QuantumTorus: bad central count");
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("QuantumTorus: matrix size mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(u[i].size()) != n)
            throw std::invalid_argument("QuantumTorus: ragged matrix");
        for (int j = 0; j < n; ++j)
            if (u[i][j] != -u[j][i])
                throw std::invalid_argument("QuantumTorus: matrix is not antisymmetric");
    }
    for (int i = n - central; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (u[i][j] != 0)
                throw std::invalid_argument("QuantumTorus: central generator with nonzero pairing");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("QuantumTorus: duplicate generator name");
    t->names_ = std::move(names);
    t->u_ = std::move(u);
    t->central_ = central;
    return t;
}

int QuantumTorus::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("QuantumTorus: unknown generator " + name);
}

long long QuantumTorus::pairing(const ExpVec& k, const ExpVec& n) const {
    if (static_cast<int>(k.size()) != size() || static_cast<int>(n.size()) != size())
        throw std::invalid_argument("pairing: dimension mismatch");
    long long s = 0;
    for (int i = 0; i < size(); ++i) {
        if (k[i] == 0) continue;
        for (int j = 0; j < size(); ++j) {
            if (n[j] == 0 || u_[i][j] == 0) continue;
            s += static_cast<long long>(u_[i][j]) * k[i] * n[j];
        }
    }
    return s;
}

namespace {

bool generated_membership(const std::vector<ExpVec>& gens, const ExpVec& k) {
    for (auto& g : gens) {
        bool zero = true;
        for (int c : g) {
            if (c < 0) throw std::invalid_argument("Submonoid: generator with negative coordinate");
            if (c != 0) zero = false;
        }
        if (zero) throw std::invalid_argument("Submonoid: zero generator");
    }
    for (int c : k)
        if (c < 0) return false;
    // DFS with memo over remaining targets.
    std::set<ExpVec> seen;
    std::vector<ExpVec> stack{k};
    while (!stack.empty()) {
        ExpVec cur = stack.back();
        stack.pop_back();
        bool all_zero = true;
        for (int c : cur)
            if (c != 0) { all_zero = false; break; }
        if (all_zero) return true;
        if (!seen.insert(cur).second) continue;
        for (auto& g : gens) {
            ExpVec next = cur;
            bool ok = true;
            for (std::size_t i = 0; i < next.size(); ++i) {
                next[i] -= g[i];
                if (next[i] < 0) { ok = false; break; }
            }
            if (ok) stack.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace

bool Submonoid::contains(const ExpVec& k) const {
    if (use_generators) return generated_membership(generators, k);
    for (auto& row : ineqs) {
        if (row.size() != k.size()) throw std::invalid_argument("Submonoid: dimension mismatch");
        long long s = 0;
        for (std::size_t i = 0; i < k.size(); ++i) s += row[i] * k[i];
        if (s < 0) return false;
    }
    for (auto& cg : congruences) {
        if (cg.coeffs.size() != k.size())
            throw std::invalid_argument("Submonoid: dimension mismatch");
        long long s = 0;
        for (std::size_t i = 0; i < k.size(); ++i) s += cg.coeffs[i] * k[i];
        if (cg.mod <= 0 || ((s % cg.mod) + cg.mod) % cg.mod != 0) return false;
    }
    return true;
}

}  // namespace sktorus
