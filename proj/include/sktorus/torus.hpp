#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sktorus/cyclotomic.hpp"
#include "sktorus/lattice.hpp"
#include "sktorus/laurent.hpp"
#include "sktorus/newton.hpp"

namespace sktorus {

using ExpVec = std::vector<int>;

/// Descriptor of the quantum torus T(U): ordered generator names, the
/// antisymmetric matrix U (exponents of q, so x_i x_j = q^{U_ij} x_j x_i),
/// and a trailing block of central generators (the R[H] coefficients of a
/// Muller algebra) whose exponents stay in N and whose U rows are zero.
class QuantumTorus {
public:
    static std::shared_ptr<const QuantumTorus> make(std::vector<std::string> names,
                                                    std::vector<std::vector<int>> u,
                                                    int central = 0);

    int size() const { return static_cast<int>(names_.size()); }
    int central() const { return central_; }
    int torus_rank() const { return size() - central_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& matrix() const { return u_; }

    int index_of(const std::string& name) const;

    /// <k,n>_U = sum_{i,j} U_ij k_i n_j  (exponent of q).
    long long pairing(const ExpVec& k, const ExpVec& n) const;

    bool same_as(const QuantumTorus& o) const {
        return names_ == o.names_ && u_ == o.u_ && central_ == o.central_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> u_;
    int central_ = 0;
};

using TorusPtr = std::shared_ptr<const QuantumTorus>;

namespace detail {
inline void scalar_shift(Laurent& s, long long t_exp) {
    s = s.t_shift(static_cast<Laurent::Exp>(t_exp));
}
inline void scalar_shift(Cyc& s, long long t_exp) { s = s.t_shift(t_exp); }

inline Laurent scalar_from_int(const Laurent&, long long c) { return Laurent(c); }
inline Cyc scalar_from_int(const Cyc& like, long long c) { return Cyc(like.ctx(), c); }

inline std::optional<Laurent> scalar_invert(const Laurent& s) {
    if (s.term_count() != 1) return std::nullopt;
    auto [e, c] = *s.terms().begin();
    if (c != 1 && c != -1) return std::nullopt;
    return Laurent::t_power(-e, c);
}
inline std::optional<Cyc> scalar_invert(const Cyc& s) {
    // units of the form +/- t^j cover everything we ever invert
    const auto& ctx = s.ctx();
    for (int j = 0; j < ctx->m; ++j) {
        Cyc cand = Cyc::t_power(ctx, j);
        if (s * cand == cand.one_like()) return cand;
        if (s * (-cand) == cand.one_like()) return -cand;
    }
    return std::nullopt;
}
}  // namespace detail

/// Element of T(U) (or of its localization at monomials): finite map from
/// exponent vectors to scalars. S is Laurent for symbolic q or Cyc at a root
/// of unity. Terms are kept in lexicographic order of the exponent vector.
template <class S>
class TorusElement {
public:
    TorusElement(TorusPtr torus, S unit) : torus_(std::move(torus)), unit_(std::move(unit)) {
        if (!torus_) throw std::invalid_argument("TorusElement: null torus");
    }

    static TorusElement monomial(TorusPtr torus, S unit, ExpVec k, S coeff) {
        TorusElement e(std::move(torus), std::move(unit));
        e.check_exponent(k);
        if (!coeff.is_zero()) e.terms_.emplace(std::move(k), std::move(coeff));
        return e;
    }

    static TorusElement generator(const TorusPtr& torus, const S& unit,
                                  const std::string& name, int power = 1) {
        ExpVec k(torus->size(), 0);
        k[torus->index_of(name)] = power;
        return monomial(torus, unit, std::move(k), unit);
    }

    static TorusElement scalar(const TorusPtr& torus, const S& unit, S value) {
        return monomial(torus, unit, ExpVec(torus->size(), 0), std::move(value));
    }

    const TorusPtr& torus() const { return torus_; }
    const S& unit() const { return unit_; }
    const std::map<ExpVec, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const TorusElement& o) const {
        return torus_->same_as(*o.torus_) && terms_ == o.terms_;
    }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    TorusElement& operator+=(const TorusElement& o) {
        check_same_torus(o);
        for (auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TorusElement operator+(const TorusElement& o) const {
        TorusElement r = *this;
        r += o;
        return r;
    }
    TorusElement operator-() const {
        TorusElement r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    TorusElement operator-(const TorusElement& o) const { return *this + (-o); }

    /// X^k X^n = q^{(1/2)<k,n>_U} X^{k+n}, extended bilinearly.
    TorusElement operator*(const TorusElement& o) const {
        check_same_torus(o);
        TorusElement r(torus_, unit_);
        for (auto& [k, ck] : terms_)
            for (auto& [n, cn] : o.terms_) {
                ExpVec sum(k.size());
                for (std::size_t i = 0; i < k.size(); ++i) sum[i] = k[i] + n[i];
                S c = ck * cn;
                detail::scalar_shift(c, torus_->pairing(k, n));  // q^{P/2} = t^P
                r.add_term(std::move(sum), std::move(c));
            }
        return r;
    }
    TorusElement& operator*=(const TorusElement& o) { *this = *this * o; return *this; }

    TorusElement scaled(const S& c) const {
        TorusElement r(torus_, unit_);
        for (auto& [k, v] : terms_) r.add_term(k, v * c);
        return r;
    }
    TorusElement t_shifted(long long t_exp) const {
        TorusElement r(torus_, unit_);
        for (auto& [k, v] : terms_) {
            S c = v;
            detail::scalar_shift(c, t_exp);
            r.add_term(k, std::move(c));
        }
        return r;
    }

    /// x^n. Negative n requires a single monomial with unit coefficient.
    TorusElement pow(long long n) const {
        if (n == 0) return scalar(torus_, unit_, unit_);
        if (n > 0) {
            TorusElement acc = scalar(torus_, unit_, unit_);
            for (long long i = 0; i < n; ++i) acc = acc * *this;
            return acc;
        }
        auto inv = inverse();
        if (!inv) throw std::domain_error("pow: negative power of a non-invertible element");
        return inv->pow(-n);
    }

    /// Inverse of a single monomial c X^k with unit c; nullopt otherwise.
    std::optional<TorusElement> inverse() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [k, c] = *terms_.begin();
        for (int i = torus_->torus_rank(); i < torus_->size(); ++i)
            if (k[i] != 0) return std::nullopt;  // central generators are not invertible
        auto cinv = detail::scalar_invert(c);
        if (!cinv) return std::nullopt;
        ExpVec nk(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) nk[i] = -k[i];
        return monomial(torus_, unit_, std::move(nk), *cinv);
    }

    /// Reflection anti-involution: coefficient-wise t -> t^{-1}, monomials fixed.
    TorusElement reflected() const {
        TorusElement r(torus_, unit_);
        for (auto& [k, c] : terms_) r.add_term(k, c.reflect());
        return r;
    }

    std::set<LatticePoint> support() const {
        std::set<LatticePoint> s;
        for (auto& [k, c] : terms_) s.insert(k);
        return s;
    }

    /// First term of this - o, as a witness string; empty when equal.
    std::string first_difference(const TorusElement& o) const {
        TorusElement d = *this - o;
        if (d.is_zero()) return {};
        const auto& [k, c] = *d.terms_.begin();
        std::ostringstream out;
        out << "(" << c.str() << ") * X^[";
        for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
        out << "]";
        return out.str();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (!first) out << " + ";
            out << "(" << c.str() << ")*X^[";
            for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
            out << "]";
            first = false;
        }
        return out.str();
    }

private:
    TorusPtr torus_;
    S unit_;
    std::map<ExpVec, S> terms_;

    void check_same_torus(const TorusElement& o) const {
        if (!torus_->same_as(*o.torus_))
            throw std::invalid_argument("TorusElement: torus mismatch");
    }
    void check_exponent(const ExpVec& k) const {
        if (static_cast<int>(k.size()) != torus_->size())
            throw std::invalid_argument("TorusElement: exponent dimension mismatch");
        for (int i = torus_->torus_rank(); i < torus_->size(); ++i)
            if (k[i] < 0)
                throw std::invalid_argument("TorusElement: negative central exponent");
    }
    void add_term(ExpVec k, S c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

using SymbolicElement = TorusElement<Laurent>;
using CycElement = TorusElement<Cyc>;

/// A word of generator powers, e.g. [a^-1 b^2 c].
using GeneratorWord = std::vector<std::pair<std::string, int>>;

/// Weyl normalization [x_1 ... x_n] = q^{-(1/2) sum_{i<j} C(x_i,x_j)} x_1 ... x_n,
/// computed from the definition (ordered product then correction). The result
/// is the normalized monomial X^k with k the exponent sum, independent of the
/// word order.
template <class S>
TorusElement<S> weyl_normalize(const GeneratorWord& word, const TorusPtr& torus, const S& unit) {
    TorusElement<S> prod = TorusElement<S>::scalar(torus, unit, unit);
    long long corr = 0;  // sum_{i<j} C(x_i, x_j), exponent of q
    std::vector<ExpVec> exps;
    for (auto& [name, e] : word) {
        ExpVec k(torus->size(), 0);
        k[torus->index_of(name)] = e;
        exps.push_back(k);
    }
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = i + 1; j < exps.size(); ++j) corr += torus->pairing(exps[i], exps[j]);
    for (std::size_t i = 0; i < exps.size(); ++i)
        prod = prod * TorusElement<S>::monomial(torus, unit, exps[i], unit);
    return prod.t_shifted(-corr);  // q^{-corr/2} = t^{-corr}
}

/// Frobenius homomorphism F_p : T(p^2 U) -> T(U), X^k -> X^{pk}.
/// Source and target must agree except that U_src = p^2 * U_tgt.
template <class S>
TorusElement<S> frobenius(const TorusElement<S>& x, int p, const TorusPtr& target) {
    if (p < 1) throw std::invalid_argument("frobenius: p must be >= 1");
    const auto& src = *x.torus();
    if (src.names() != target->names() || src.central() != target->central())
        throw std::invalid_argument("frobenius: generator mismatch");
    for (int i = 0; i < src.size(); ++i)
        for (int j = 0; j < src.size(); ++j)
            if (src.matrix()[i][j] != p * p * target->matrix()[i][j])
                throw std::invalid_argument("frobenius: source matrix is not p^2 * target");
    TorusElement<S> r(target, x.unit());
    for (auto& [k, c] : x.terms()) {
        ExpVec pk(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) pk[i] = p * k[i];
        r += TorusElement<S>::monomial(target, x.unit(), std::move(pk), c);
    }
    return r;
}

/// Newton support and vertex set (exponent vectors over all indices).
template <class S>
std::vector<LatticePoint> newton_support(const TorusElement<S>& x) {
    if (x.is_zero()) throw std::invalid_argument("newton_support: zero element");
    auto s = x.support();
    return {s.begin(), s.end()};
}

template <class S>
std::set<LatticePoint> newton_vertices(const TorusElement<S>& x) {
    return hull_vertices(newton_support(x));
}

/// Description of a submonoid of Z^I: either linear inequalities plus
/// congruences, or an explicit generator list (generators must have
/// nonnegative coordinates so membership search terminates).
struct Submonoid {
    std::vector<IntVec> ineqs;  // rows r with r . k >= 0
    struct Congruence {
        IntVec coeffs;
        long long mod = 0;
    };
    std::vector<Congruence> congruences;
    std::vector<ExpVec> generators;
    bool use_generators = false;

    bool contains(const ExpVec& k) const;
};

/// supp(x) inside the submonoid?
template <class S>
bool monomial_algebra_membership(const TorusElement<S>& x, const Submonoid& sub) {
    for (auto& [k, c] : x.terms())
        if (!sub.contains(k)) return false;
    return true;
}

}  // namespace sktorus
