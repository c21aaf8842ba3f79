#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parmod/lattice.hpp"

namespace parmod {

/// Deterministic sampling for verification runs: raw mt19937_64 output
/// mapped to [0,1) at 53-bit resolution, so streams are identical across
/// platforms. Task seeds derive from (seed, task) and each check owns its
/// task index, which keeps reports byte-identical even if checks run
/// concurrently.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t task = 0)
        : gen_(seed + task * 0x9E3779B97F4A7C15ull) {}

    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }
    /// Uniform fundamental-cell point s + r*tau, reduced.
    TorusPoint torus_point(const LatticeTau& lat) {
        const double s = uniform(), r = uniform();
        return reduce_mod_lattice(lat, s + r * lat.tau);
    }
    /// Uniform integer in [0, n).
    int index(int n) { return int(uniform() * n) % n; }

  private:
    std::mt19937_64 gen_;
};

/// Configuration of a verification run. Marked points left at zero are
/// replaced by the generic defaults p1 = 0.23 + 0.11 tau, p2 = 0.61 +
/// 0.37 tau, p3 = 0.08 + 0.77 tau.
struct VerifyOptions {
    cplx tau{0.3, 1.1};
    cplx p1{0.0}, p2{0.0}, p3{0.0};
    double tol = 1e-9;
    double trunc_eps = 1e-14;
    int samples = 200;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    bool pass;
    double max_residual;
};

/// The per-module verification suites. Each returns one entry per check;
/// exceptions inside a check are reported as a failed entry rather than
/// thrown (configuration errors, e.g. invalid tau, do throw).
std::vector<CheckResult> verify_weierstrass(const VerifyOptions& opts);
std::vector<CheckResult> verify_hecke(const VerifyOptions& opts);
std::vector<CheckResult> verify_moduli(const VerifyOptions& opts);
std::vector<CheckResult> verify_poincare(const VerifyOptions& opts);

/// Dispatch by suite name ("weierstrass", "hecke", "moduli", "poincare",
/// "all"); throws Error for unknown names.
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyOptions& opts);

}  // namespace parmod
