#pragma once

#include "sktorus/torus.hpp"

namespace sktorus {

/// Integer polynomial in one variable z, sparse ascending-degree map.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(long long constant) {
        if (constant != 0) coeffs_[0] = constant;
    }
    static IntPolynomial z_power(int k, long long c = 1) {
        IntPolynomial p;
        if (c != 0) p.coeffs_[k] = c;
        return p;
    }

    const std::map<int, long long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    long long coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? 0 : it->second;
    }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<int, long long> coeffs_;
};

/// Chebyshev polynomial of type one: T_0 = 2, T_1 = z, T_n = z T_{n-1} - T_{n-2}.
IntPolynomial chebyshev_t(int n);

/// c(n,r,j) = ([n]_q/[r]_q) [n-j-1 choose r-1]_q [r+j-1 choose r-1]_q, exact.
Laurent cnrj(int n, int r, int j);

/// The 2-generator torus with KE = q^2 EK; generators named "K" and "E".
TorusPtr demoivre_torus();

/// Closed form of T_n(K + K^{-1} + E):
///   K^n + K^{-n} + E^n + sum_{r,j} c(n,r,j) [E^r K^{n-2j-r}].
SymbolicElement generalized_demoivre(int n);

/// sum_i c_i x^i evaluated in the torus of x.
template <class S>
TorusElement<S> thread(const IntPolynomial& p, const TorusElement<S>& x) {
    TorusElement<S> acc(x.torus(), x.unit());
    for (auto& [deg, c] : p.coeffs())
        acc += x.pow(deg).scaled(detail::scalar_from_int(x.unit(), c));
    return acc;
}

/// T_n(X + X^{-1}) == X^n + X^{-n} by direct torus evaluation.
bool demoivre_check(int n);

}  // namespace sktorus
