#include "sktorus/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sktorus {

namespace {

// Exact division of integer polynomials (ascending coefficients), divisor monic.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<long long> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        long long c = num[k + dd];
        quot[k] = c;
        if (c != 0)
            for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (auto c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m < 1");
    // (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

std::shared_ptr<const CycContext> CycContext::make(int m) {
    if (m < 1) throw std::invalid_argument("root_data: m must be >= 1");
    auto ctx = std::make_shared<CycContext>();
    ctx->m = m;
    ctx->phi = cyclotomic_polynomial(m);
    ctx->degree = static_cast<int>(ctx->phi.size()) - 1;
    ctx->ord_xi = m / std::gcd(m, 2);
    ctx->ord_xi4 = m / std::gcd(m, 8);
    long long n = ctx->ord_xi4;
    ctx->epsilon_exp = static_cast<int>((2 * n * n) % m);

    // Residues of t^i for i in [0, m); t^m = 1 in Z[t]/(Phi_m).
    ctx->t_pow.assign(m, std::vector<long long>(std::max(ctx->degree, 1), 0));
    std::vector<long long> cur(std::max(ctx->degree, 1), 0);
    if (ctx->degree > 0) cur[0] = 1;
    for (int i = 0; i < m; ++i) {
        ctx->t_pow[i] = cur;
        // multiply by t, reduce by monic phi
        std::vector<long long> next(cur.size(), 0);
        for (int j = 0; j + 1 < static_cast<int>(cur.size()); ++j) next[j + 1] = cur[j];
        long long overflow = ctx->degree > 0 ? cur[ctx->degree - 1] : 0;
        if (overflow != 0)
            for (int j = 0; j < ctx->degree; ++j) next[j] -= overflow * ctx->phi[j];
        cur = next;
    }
    return ctx;
}

CycContextPtr root_data(int m) { return CycContext::make(m); }

Cyc::Cyc(CycContextPtr ctx, long long constant) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("Cyc: null context");
    res_.assign(std::max(ctx_->degree, 1), 0);
    if (ctx_->degree == 0) return;  // m = 1: Phi_1 = t - 1... degree 1; never 0 in fact
    res_[0] = constant;
}

Cyc Cyc::t_power(const CycContextPtr& ctx, long long k) {
    Cyc r(ctx, 0);
    long long j = ((k % ctx->m) + ctx->m) % ctx->m;
    r.res_ = ctx->t_pow[static_cast<std::size_t>(j)];
    return r;
}

void Cyc::check_compatible(const Cyc& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->m != o.ctx_->m)
        throw std::invalid_argument("Cyc: mixed cyclotomic contexts");
}

bool Cyc::is_zero() const {
    for (auto c : res_)
        if (c != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    check_compatible(o);
    Cyc r = *this;
    for (std::size_t i = 0; i < res_.size(); ++i) r.res_[i] += o.res_[i];
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    check_compatible(o);
    Cyc r = *this;
    for (std::size_t i = 0; i < res_.size(); ++i) r.res_[i] -= o.res_[i];
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& c : r.res_) c = -c;
    return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
    check_compatible(o);
    Cyc r(ctx_, 0);
    const int d = ctx_->degree;
    for (int i = 0; i < d; ++i) {
        if (res_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.res_[j] == 0) continue;
            long long c = res_[i] * o.res_[j];
            const auto& basis = ctx_->t_pow[(i + j) % ctx_->m];
            for (int k = 0; k < d; ++k) r.res_[k] += c * basis[k];
        }
    }
    return r;
}

bool Cyc::operator==(const Cyc& o) const {
    check_compatible(o);
    return res_ == o.res_;
}

Cyc Cyc::t_shift(long long k) const {
    Cyc r(ctx_, 0);
    long long j = ((k % ctx_->m) + ctx_->m) % ctx_->m;
    const int d = ctx_->degree;
    for (int i = 0; i < d; ++i) {
        if (res_[i] == 0) continue;
        const auto& basis = ctx_->t_pow[(i + j) % ctx_->m];
        for (int kk = 0; kk < d; ++kk) r.res_[kk] += res_[i] * basis[kk];
    }
    return r;
}

Cyc Cyc::reflect() const {
    Cyc r(ctx_, 0);
    const int d = ctx_->degree;
    for (int i = 0; i < d; ++i) {
        if (res_[i] == 0) continue;
        const auto& basis = ctx_->t_pow[(ctx_->m - i) % ctx_->m];
        for (int kk = 0; kk < d; ++kk) r.res_[kk] += res_[i] * basis[kk];
    }
    return r;
}

std::string Cyc::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < res_.size(); ++i) {
        if (res_[i] == 0) continue;
        if (!first) out << " + ";
        out << res_[i] << "*t^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Cyc specialize(const Laurent& a, const CycContextPtr& ctx) {
    Cyc r(ctx, 0);
    for (auto& [e, c] : a.terms()) r += Cyc(ctx, c) * Cyc::t_power(ctx, e);
    return r;
}

}  // namespace sktorus
