#pragma once

#include <optional>

#include "sktorus/statesum.hpp"

namespace sktorus {

/// Outcome of one verification. The verified statements are biconditional, so
/// a check passes exactly when the computed verdict matches the expected one;
/// expected inequalities must fail with a concrete witness term.
struct VerificationReport {
    std::string name;
    std::string status;        // "pass" | "fail" | "skip"
    bool computed_equal = false;
    bool expected_equal = false;
    std::string witness;       // first differing term when unequal
    double ms = 0.0;
    std::string detail;

    bool passed() const { return status == "pass"; }
};

struct VerifyConfig {
    long long budget = DiskStateSum<Cyc>::default_budget;
    std::string fixture_dir;
};

/// key=value file (budget, fixture_dir), then SKTORUS_* environment overrides.
VerifyConfig load_config(const std::optional<std::string>& path);

/// (X+Y)^N = X^N + Y^N in the torus with XY = q^4 YX; holds iff ord(xi^4) = N.
VerificationReport check_gauss(std::optional<int> m, int n);

/// Annulus Chebyshev-Frobenius: F_N(alpha) = T_N(alpha) for the annulus knot;
/// holds at a root of unity with N = ord(xi^4), fails symbolically for N >= 2.
VerificationReport check_frobenius_annulus(std::optional<int> m, int n_symbolic = 2);

/// Flip coherence on the 4-marked disk: F_N and the transfer map commute on
/// the flipped diagonal iff ord(xi^4) = N.
VerificationReport check_flip_coherence(std::optional<int> m, int n);

/// ker P has the boundary-component indicator basis; nullity = number of
/// marked components.
VerificationReport check_center_generic(const SurfaceFixture& f);

/// Gamma_N basis of the fixture's Muller torus.
std::vector<IntVec> center_gamma_basis(const SurfaceFixture& f, int n);

/// Transparency of the Chebyshev-Frobenius image at t of order m.
VerificationReport check_transparency(int m, long long budget);

/// T_N(-xi^2-xi^-2) = -eps^2 - eps^-2 and eps^4 = 1.
VerificationReport check_trivial_loop(int m);

/// State-sum total vs the closed form, symbolically or at a root.
VerificationReport check_statesum(int n, std::optional<int> m, long long budget);

std::vector<VerificationReport> run_all(const VerifyConfig& cfg);

}  // namespace sktorus
