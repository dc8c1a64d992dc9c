#include "sktorus/cheby.hpp"

namespace sktorus {

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (auto& [k, c] : o.coeffs_) {
        r.coeffs_[k] += c;
        if (r.coeffs_[k] == 0) r.coeffs_.erase(k);
    }
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    for (auto& [k, c] : o.coeffs_) {
        r.coeffs_[k] -= c;
        if (r.coeffs_[k] == 0) r.coeffs_.erase(k);
    }
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial r;
    for (auto& [k1, c1] : coeffs_)
        for (auto& [k2, c2] : o.coeffs_) {
            r.coeffs_[k1 + k2] += c1 * c2;
            if (r.coeffs_[k1 + k2] == 0) r.coeffs_.erase(k1 + k2);
        }
    return r;
}

IntPolynomial chebyshev_t(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_t: n < 0");
    IntPolynomial prev(2);            // T_0
    if (n == 0) return prev;
    IntPolynomial cur = IntPolynomial::z_power(1);  // T_1
    for (int i = 2; i <= n; ++i) {
        IntPolynomial next = IntPolynomial::z_power(1) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Laurent cnrj(int n, int r, int j) {
    if (r < 1 || r > n - 1 || j < 0 || j > n - r)
        throw std::invalid_argument("cnrj: indices out of range");
    Laurent num = quantum_integer(n) * quantum_binomial(n - j - 1, r - 1) *
                  quantum_binomial(r + j - 1, r - 1);
    auto q = num.divide_exact(quantum_integer(r));
    if (!q) throw std::logic_error("cnrj: non-exact division");
    return *q;
}

TorusPtr demoivre_torus() {
    return QuantumTorus::make({"K", "E"}, {{0, 2}, {-2, 0}});
}

SymbolicElement generalized_demoivre(int n) {
    if (n < 1) throw std::invalid_argument("generalized_demoivre: n < 1");
    auto torus = demoivre_torus();
    Laurent one(1);
    SymbolicElement r(torus, one);
    r += SymbolicElement::monomial(torus, one, {n, 0}, one);
    r += SymbolicElement::monomial(torus, one, {-n, 0}, one);
    r += SymbolicElement::monomial(torus, one, {0, n}, one);
    for (int rr = 1; rr <= n - 1; ++rr)
        for (int j = 0; j <= n - rr; ++j)
            r += SymbolicElement::monomial(torus, one, {n - 2 * j - rr, rr}, cnrj(n, rr, j));
    return r;
}

bool demoivre_check(int n) {
    auto torus = QuantumTorus::make({"X"}, {{0}});
    Laurent one(1);
    auto x = SymbolicElement::generator(torus, one, "X");
    auto arg = x + x.pow(-1);
    SymbolicElement expect(torus, one);
    expect += SymbolicElement::monomial(torus, one, {n}, one);
    expect += SymbolicElement::monomial(torus, one, {-n}, one);
    return thread(chebyshev_t(n), arg) == expect;
}

}  // namespace sktorus
