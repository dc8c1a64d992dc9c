#include "sktorus/laurent.hpp"

#include <sstream>

namespace sktorus {

Laurent::Exp Laurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero");
    return terms_.begin()->first;
}

Laurent::Exp Laurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero");
    return terms_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Exp e = e1 + e2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::t_shift(Exp k) const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

Laurent Laurent::reflect() const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Laurent Laurent::t_scale(int s) const {
    if (s < 1) throw std::invalid_argument("t_scale: s must be >= 1");
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e * s] = c;
    return r;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return Laurent();
    // Shift so both are ordinary polynomials, then long division over Z.
    Laurent rem = *this;
    const Exp dmax = divisor.max_exp();
    const Coeff dlead = divisor.terms_.rbegin()->second;
    Laurent quot;
    while (!rem.is_zero()) {
        Exp rmax = rem.max_exp();
        if (rmax - dmax < rem.min_exp() - divisor.min_exp()) return std::nullopt;
        Coeff rlead = rem.terms_.rbegin()->second;
        if (rlead % dlead != 0) return std::nullopt;
        Laurent piece = Laurent::t_power(rmax - dmax, rlead / dlead);
        quot += piece;
        rem -= piece * divisor;
        if (!rem.is_zero() && rem.max_exp() >= rmax) return std::nullopt;
    }
    return quot;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) out << " + ";
        out << c << "*t^" << e;
        first = false;
    }
    return out.str();
}

Laurent quantum_integer(int n) {
    Laurent r;
    if (n == 0) return r;
    int a = n > 0 ? n : -n;
    for (int k = a - 1; k >= 1 - a; k -= 2) r += Laurent::q_power(k);
    return n > 0 ? r : -r;
}

Laurent quantum_binomial(int n, int k, QBase base) {
    if (k < 0) throw std::invalid_argument("quantum_binomial: k < 0");
    Laurent r(1);
    for (int j = 1; j <= k; ++j) {
        r *= quantum_integer(n - j + 1);
        auto q = r.divide_exact(quantum_integer(j));
        if (!q) throw std::logic_error("quantum_binomial: non-exact division");
        r = *q;
    }
    if (base == QBase::q4) r = r.t_scale(4);
    return r;
}

Laurent gaussian_binomial_q4(int n, int k) {
    return quantum_binomial(n, k).t_scale(2).t_shift(4 * k * (n - k));
}

}  // namespace sktorus
