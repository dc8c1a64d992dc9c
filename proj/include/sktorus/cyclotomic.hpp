#pragma once

#include <memory>
#include <vector>

#include "sktorus/laurent.hpp"

namespace sktorus {

/// Integer coefficient list of the m-th cyclotomic polynomial, ascending degree.
std::vector<long long> cyclotomic_polynomial(int m);

/// Specialization data for t = zeta_m, a primitive m-th root of unity.
/// Arithmetic happens in Z[t]/(Phi_m(t)), which is exact.
struct CycContext {
    int m = 0;                       // order of t
    std::vector<long long> phi;      // Phi_m, monic, ascending
    int degree = 0;                  // deg Phi_m
    int ord_xi = 0;                  // ord(xi), xi = t^2 = q
    int ord_xi4 = 0;                 // N = ord(xi^4)
    int epsilon_exp = 0;             // epsilon = t^{epsilon_exp}, = 2N^2 mod m
    std::vector<std::vector<long long>> t_pow;  // residues of t^0..t^{m-1}

    static std::shared_ptr<const CycContext> make(int m);
};

using CycContextPtr = std::shared_ptr<const CycContext>;

/// root_data: derived quantities N = ord(xi^4) and epsilon = xi^{N^2} for t of order m.
CycContextPtr root_data(int m);

/// Element of Z[t]/(Phi_m): exact model of a scalar at a root of unity.
class Cyc {
public:
    Cyc() = default;
    Cyc(CycContextPtr ctx, long long constant = 0);

    static Cyc t_power(const CycContextPtr& ctx, long long k);

    const CycContextPtr& ctx() const { return ctx_; }
    const std::vector<long long>& residue() const { return res_; }

    bool is_zero() const;
    Cyc one_like() const { return Cyc(ctx_, 1); }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    /// Multiply by t^k (k may be negative; t has order m).
    Cyc t_shift(long long k) const;

    /// t -> t^{-1}.
    Cyc reflect() const;

    std::string str() const;

private:
    CycContextPtr ctx_;
    std::vector<long long> res_;  // length ctx_->degree

    void check_compatible(const Cyc& o) const;
};

/// Image of a symbolic Laurent scalar under t -> zeta_m.
Cyc specialize(const Laurent& a, const CycContextPtr& ctx);

}  // namespace sktorus
