#pragma once

#include <array>
#include <utility>
#include <vector>

#include "parmod/errors.hpp"
#include "parmod/lattice.hpp"
#include "parmod/projective.hpp"

namespace parmod {

/// Immutable evaluation context for the Weierstrass functions of the lattice
/// Z + tau*Z, built on nome q-series (DLMF 23.8) with quasi-periods eta1,
/// eta2 of zeta for the periods 1 and tau.
///
/// eta1 comes from the Eisenstein series E2; eta2 is computed independently
/// from the zeta series at tau/2, so the Legendre relation
/// eta1*tau - eta2 = 2*pi*i acts as a genuine cross-check of both routes.
class WeierstrassContext {
  public:
    explicit WeierstrassContext(LatticeTau lat, double trunc_eps = 1e-14,
                                int term_cap = 64);

    const LatticeTau& lattice() const { return lat_; }
    cplx tau() const { return lat_.tau; }
    double tol() const { return lat_.tol; }
    cplx nome() const { return q_; }
    cplx g2() const { return g2_; }
    cplx g3() const { return g3_; }
    cplx eta1() const { return eta1_; }
    cplx eta2() const { return eta2_; }
    double trunc_eps() const { return trunc_eps_; }
    int term_cap() const { return term_cap_; }

    /// Seed grid for pillowcase preimage refinement: cell points with their
    /// wp values, precomputed eagerly so the context stays immutable.
    const std::vector<std::pair<cplx, cplx>>& seed_grid() const { return grid_; }

  private:
    LatticeTau lat_;
    double trunc_eps_;
    int term_cap_;
    cplx q_, g2_, g3_, eta1_, eta2_;
    std::vector<std::pair<cplx, cplx>> grid_;
};

/// Weierstrass functions; lattice points map to the explicit infinity
/// (wp, wp_prime, zeta_w) or to exactly 0 (sigma_w).
ProjPoint wp(const WeierstrassContext& ctx, cplx z);
ProjPoint wp_prime(const WeierstrassContext& ctx, cplx z);
ProjPoint zeta_w(const WeierstrassContext& ctx, cplx z);
cplx sigma_w(const WeierstrassContext& ctx, cplx z);

/// The pillowcase map p: Jac(X) -> M^{ss}(X) ~ CP^1, [L] -> [L + L^{-1}],
/// realized as lam -> wp(lam) with the origin mapping to infinity.
ProjPoint pillowcase_map(const WeierstrassContext& ctx, TorusPoint lam);

/// Values of the pillowcase map at the four 2-torsion points, in index
/// order: {inf, wp(1/2), wp(tau/2), wp((1+tau)/2)} — the branch values of
/// the double cover.
std::array<ProjPoint, 4> pillowcase_branch_values(const WeierstrassContext& ctx);

/// The two solutions +-lam of pillowcase_map(lam) = c (equal at branch
/// values; (0,0) for c = inf). Newton refinement from precomputed seeds;
/// throws ToleranceFailure if the chordal residual cannot reach 1e-7.
std::pair<TorusPoint, TorusPoint> pillowcase_preimages(
    const WeierstrassContext& ctx, const ProjPoint& c);

}  // namespace parmod
