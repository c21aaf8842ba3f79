#include "parmod/weierstrass.hpp"

#include <cmath>
#include <numbers>

namespace parmod {

namespace {

constexpr double kPi = std::numbers::pi;

// Hard cutoff below which a centered argument counts as a lattice point.
// Distinct from the user-facing tol: function poles are a property of the
// evaluation engine, not of torus-point comparison.
constexpr double kPoleEps = 1e-12;
constexpr double kSigmaZeroEps = 1e-15;

struct Centered {
    cplx z0;
    long m;   // multiples of tau removed
    long n;   // multiples of 1 removed
};

// Reduce z to z0 = z - m*tau - n with coefficients rounded to the nearest
// integers, so |Im z0| <= Im(tau)/2 and the series below converge fast.
Centered centered(const LatticeTau& lat, cplx z) {
    const double r = z.imag() / lat.tau.imag();
    const long m = std::lround(r);
    const double s = z.real() - r * lat.tau.real();
    const long n = std::lround(s);
    return {z - double(m) * lat.tau - double(n), m, n};
}

cplx sqr(cplx x) { return x * x; }

}  // namespace

// ---- context construction -------------------------------------------------

namespace {

// Eisenstein series 1 + sign*coef*sum_{n>=1} sigma_w(n) qF^n with qF = q^2
// (DLMF 23.9; divisor sums sigma_w of weight 1, 3, 5 for E2, E4, E6).
cplx eisenstein(cplx q2, int weight, double coef, double sign, double eps) {
    cplx acc(1.0, 0.0);
    cplx qn = q2;
    for (int n = 1; n < 400; ++n) {
        double sig = 0.0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sig += std::pow(double(d), weight);
        const cplx term = sign * coef * sig * qn;
        acc += term;
        if (std::abs(term) < eps * std::abs(acc)) return acc;
        qn *= q2;
    }
    throw NonConvergence("Eisenstein series did not converge");
}

// Raw zeta series at a centered argument (no quasi-period correction):
// zeta(z0) = eta1*z0 + pi*cot(pi*z0) + 4*pi*sum_k q^{2k}/(1-q^{2k}) sin(2*pi*k*z0).
cplx zeta_series_centered(cplx z0, cplx eta1, cplx q, double eps, int cap) {
    const cplx u = kPi * z0;
    cplx acc = eta1 * z0 + kPi * std::cos(u) / std::sin(u);
    const cplx qq = q * q;
    cplx qn = qq;
    for (int k = 1; k < cap; ++k) {
        const cplx term =
            4.0 * kPi * qn / (1.0 - qn) * std::sin(2.0 * kPi * double(k) * z0);
        acc += term;
        if (std::abs(term) < eps * std::max(1.0, std::abs(acc))) return acc;
        qn *= qq;
    }
    throw NonConvergence("zeta series did not converge");
}

}  // namespace

WeierstrassContext::WeierstrassContext(LatticeTau lat, double trunc_eps,
                                       int term_cap)
    : lat_(lat), trunc_eps_(trunc_eps), term_cap_(term_cap) {
    q_ = std::exp(cplx(0.0, kPi) * lat_.tau);
    const cplx q2 = q_ * q_;
    const cplx e2 = eisenstein(q2, 1, 24.0, -1.0, trunc_eps_);
    const cplx e4 = eisenstein(q2, 3, 240.0, +1.0, trunc_eps_);
    const cplx e6 = eisenstein(q2, 5, 504.0, -1.0, trunc_eps_);
    const double pi2 = kPi * kPi;
    g2_ = (4.0 * pi2 * pi2 / 3.0) * e4;
    g3_ = (8.0 * pi2 * pi2 * pi2 / 27.0) * e6;
    eta1_ = (pi2 / 3.0) * e2;
    // Independent quasi-period for tau: evaluate the raw series at tau/2,
    // which is already centered, then use oddness: eta2 = 2*zeta(tau/2).
    eta2_ = 2.0 * zeta_series_centered(lat_.tau / 2.0, eta1_, q_, trunc_eps_,
                                       term_cap_);
    // Pillowcase preimage seeds: offset grid avoiding the lattice point.
    const int n = 32;
    grid_.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx z = (i + 0.5) / double(n) +
                           (j + 0.5) / double(n) * lat_.tau;
            const ProjPoint w = wp(*this, z);
            grid_.emplace_back(z, w.value());   // grid avoids poles by offset
        }
}

// ---- function evaluation --------------------------------------------------

ProjPoint wp(const WeierstrassContext& ctx, cplx z) {
    const auto c = centered(ctx.lattice(), z);
    if (std::abs(c.z0) < kPoleEps) return ProjPoint::infinity();
    const cplx u = kPi * c.z0;
    cplx acc = -ctx.eta1() + kPi * kPi / sqr(std::sin(u));
    const cplx qq = ctx.nome() * ctx.nome();
    cplx qn = qq;
    for (int k = 1; k < ctx.term_cap(); ++k) {
        const cplx term = -8.0 * kPi * kPi * double(k) * qn / (1.0 - qn) *
                          std::cos(2.0 * kPi * double(k) * c.z0);
        acc += term;
        if (std::abs(term) < ctx.trunc_eps() * std::max(1.0, std::abs(acc)))
            return ProjPoint(acc);
        qn *= qq;
    }
    throw NonConvergence("wp series did not converge");
}

ProjPoint wp_prime(const WeierstrassContext& ctx, cplx z) {
    const auto c = centered(ctx.lattice(), z);
    if (std::abs(c.z0) < kPoleEps) return ProjPoint::infinity();
    const cplx u = kPi * c.z0;
    const double pi3 = kPi * kPi * kPi;
    cplx acc = -2.0 * pi3 * std::cos(u) / (sqr(std::sin(u)) * std::sin(u));
    const cplx qq = ctx.nome() * ctx.nome();
    cplx qn = qq;
    for (int k = 1; k < ctx.term_cap(); ++k) {
        const cplx term = 16.0 * pi3 * double(k) * double(k) * qn / (1.0 - qn) *
                          std::sin(2.0 * kPi * double(k) * c.z0);
        acc += term;
        if (std::abs(term) < ctx.trunc_eps() * std::max(1.0, std::abs(acc)))
            return ProjPoint(acc);
        qn *= qq;
    }
    throw NonConvergence("wp_prime series did not converge");
}

ProjPoint zeta_w(const WeierstrassContext& ctx, cplx z) {
    const auto c = centered(ctx.lattice(), z);
    if (std::abs(c.z0) < kPoleEps) return ProjPoint::infinity();
    cplx acc = zeta_series_centered(c.z0, ctx.eta1(), ctx.nome(),
                                    ctx.trunc_eps(), ctx.term_cap());
    if (c.m != 0 || c.n != 0)
        acc += double(c.n) * ctx.eta1() + double(c.m) * ctx.eta2();
    return ProjPoint(acc);
}

cplx sigma_w(const WeierstrassContext& ctx, cplx z) {
    const auto c = centered(ctx.lattice(), z);
    cplx base(0.0, 0.0);
    if (std::abs(c.z0) >= kSigmaZeroEps) {
        // sigma via the odd theta function (DLMF 23.6.9), with the common
        // q^{1/4} prefactor cancelling between numerator and normalization:
        //   sigma(z0) = exp(eta1/2 * z0^2) * th(pi*z0) / (pi * th'(0)),
        //   th(u) = 2 sum_k (-1)^k q^{k(k+1)} sin((2k+1)u).
        const cplx u = kPi * c.z0;
        cplx num(0.0, 0.0), den(0.0, 0.0);
        cplx qpow(1.0, 0.0);                       // q^{k(k+1)}
        cplx qstep = ctx.nome() * ctx.nome();      // multiply to advance k
        double sgn = 1.0;
        for (int k = 0; k < ctx.term_cap(); ++k) {
            const cplx coef = sgn * qpow;
            num += 2.0 * coef * std::sin(double(2 * k + 1) * u);
            den += 2.0 * coef * double(2 * k + 1);
            if (k > 1 && std::abs(qpow) < ctx.trunc_eps()) break;
            qpow *= qstep;                         // q^{k(k+1)} -> q^{(k+1)(k+2)}
            qstep *= ctx.nome() * ctx.nome();
            sgn = -sgn;
        }
        base = std::exp(ctx.eta1() / 2.0 * sqr(c.z0)) * num / (kPi * den);
    }
    if (c.m == 0 && c.n == 0) return base;
    const cplx omega = double(c.n) + double(c.m) * ctx.tau();
    const cplx eta_omega = double(c.n) * ctx.eta1() + double(c.m) * ctx.eta2();
    const double sgn = ((c.n + c.m + c.n * c.m) % 2 != 0) ? -1.0 : 1.0;
    return sgn * base * std::exp(eta_omega * (c.z0 + omega / 2.0));
}

// ---- pillowcase -----------------------------------------------------------

ProjPoint pillowcase_map(const WeierstrassContext& ctx, TorusPoint lam) {
    if (torus_eq(ctx.lattice(), lam, TorusPoint{cplx(0.0, 0.0)}))
        return ProjPoint::infinity();
    return wp(ctx, lam.z);
}

std::array<ProjPoint, 4> pillowcase_branch_values(const WeierstrassContext& ctx) {
    const auto tors = two_torsion_points(ctx.lattice());
    return {ProjPoint::infinity(), wp(ctx, tors[1].z), wp(ctx, tors[2].z),
            wp(ctx, tors[3].z)};
}

namespace {

cplx wp_second(const WeierstrassContext& ctx, cplx z) {
    const cplx p = wp(ctx, z).value();
    return 6.0 * p * p - ctx.g2() / 2.0;
}

}  // namespace

std::pair<TorusPoint, TorusPoint> pillowcase_preimages(
    const WeierstrassContext& ctx, const ProjPoint& c) {
    const auto& lat = ctx.lattice();
    if (c.is_inf()) {
        const TorusPoint zero{cplx(0.0, 0.0)};
        return {zero, zero};
    }
    const cplx cv = c.value();
    std::vector<cplx> seeds;
    // Near a branch value, second-order expansion around the half-period:
    // wp(w + d) ~ e_k + wp''(w)/2 * d^2, so d = sqrt(2(c-e_k)/wp''(w)).
    const auto tors = two_torsion_points(lat);
    for (int i = 1; i < 4; ++i) {
        const cplx ek = wp(ctx, tors[i].z).value();
        if (chordal(c, ProjPoint(ek)) < 1e-2) {
            const cplx d2 = 2.0 * (cv - ek) / wp_second(ctx, tors[i].z);
            seeds.push_back(tors[i].z + std::sqrt(d2));
        }
    }
    // Pole region: wp ~ 1/z^2, and 1/sqrt(c) sits in the superattracting
    // basin of the Newton iteration.
    if (std::abs(cv) > 100.0) seeds.push_back(1.0 / std::sqrt(cv));
    // Otherwise start from the best precomputed grid point.
    {
        double best = 1e300;
        cplx bz(0.0, 0.0);
        for (const auto& [z, w] : ctx.seed_grid()) {
            const double d = chordal(ProjPoint(w), c);
            if (d < best) {
                best = d;
                bz = z;
            }
        }
        seeds.push_back(bz);
    }
    for (const cplx seed : seeds) {
        cplx z = seed;
        bool converged = false;
        for (int it = 0; it < 60; ++it) {
            const ProjPoint fz = wp(ctx, z);
            if (fz.is_inf()) break;
            if (chordal(fz, c) < 1e-12) {
                converged = true;
                break;
            }
            const ProjPoint dz = wp_prime(ctx, z);
            if (dz.is_inf() || dz.value() == cplx(0.0, 0.0)) break;
            cplx step = (fz.value() - cv) / dz.value();
            if (std::abs(step) > 0.25) step *= 0.25 / std::abs(step);
            z -= step;
        }
        if (converged || chordal(wp(ctx, z), c) < 1e-7) {
            const TorusPoint lam = reduce_mod_lattice(lat, z);
            return {lam, torus_neg(lat, lam)};
        }
    }
    throw ToleranceFailure("pillowcase_preimages: residual bound not met");
}

}  // namespace parmod
