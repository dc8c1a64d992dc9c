#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace sktorus {

/// Exact Laurent polynomial in t = q^{1/2} with integer coefficients.
/// Exponents are in units of t, so q^k is exponent 2k.
class Laurent {
public:
    using Exp = int;
    using Coeff = long long;

    Laurent() = default;
    explicit Laurent(Coeff constant) {
        if (constant != 0) terms_[0] = constant;
    }

    static Laurent t_power(Exp k, Coeff c = 1) {
        Laurent r;
        if (c != 0) r.terms_[k] = c;
        return r;
    }
    // q^k = t^{2k}
    static Laurent q_power(Exp k, Coeff c = 1) { return t_power(2 * k, c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Coeff>& terms() const { return terms_; }

    Coeff coeff(Exp k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }
    Exp min_exp() const;
    Exp max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Multiply by t^k.
    Laurent t_shift(Exp k) const;

    /// The reflection eta: t -> t^{-1}.
    Laurent reflect() const;

    /// Substitute t -> t^s (s >= 1).
    Laurent t_scale(int s) const;

    /// Exact division; nullopt when the quotient is not a Laurent polynomial
    /// over the integers.
    std::optional<Laurent> divide_exact(const Laurent& divisor) const;

    /// Canonical form: terms by ascending t-exponent, "c*t^k" joined by " + ".
    std::string str() const;

    bool all_coeffs_nonnegative() const {
        for (auto& [e, c] : terms_) { (void)e; if (c < 0) return false; }
        return true;
    }

private:
    std::map<Exp, Coeff> terms_;  // no zero coefficients stored
};

inline Laurent operator*(Laurent::Coeff c, const Laurent& a) { return Laurent(c) * a; }

/// [n]_q = (q^n - q^{-n})/(q - q^{-1}) as the geometric sum q^{n-1} + q^{n-3} + ... + q^{1-n}.
Laurent quantum_integer(int n);

enum class QBase { q, q4 };

/// Balanced quantum binomial [n k]_base = prod_{j=1..k} [n-j+1]/[j], computed so
/// that every intermediate division is exact. Throws on a non-exact division
/// (which would indicate a bug, not bad input).
Laurent quantum_binomial(int n, int k, QBase base = QBase::q);

/// One-parameter Gaussian binomial in q^4:
/// prod_{j=1..k} (1 - q^{4(n-j+1)})/(1 - q^{4j}) = q^{2k(n-k)} [n k]_{q^2}.
/// This is the binomial of the Gauss product formula (and it vanishes for
/// 0 < k < n exactly when q^4 is a root of unity of order n).
Laurent gaussian_binomial_q4(int n, int k);

}  // namespace sktorus
