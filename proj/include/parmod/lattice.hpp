#pragma once

#include <array>
#include <complex>

#include "parmod/errors.hpp"

namespace parmod {

using cplx = std::complex<double>;

/// The lattice Lambda = Z + tau*Z defining the complex torus C/Lambda,
/// together with the comparison tolerance used for torus-point equality.
struct LatticeTau {
    cplx tau;
    double tol = 1e-9;

    LatticeTau(cplx tau_, double tol_ = 1e-9) : tau(tau_), tol(tol_) {
        if (!(tau.imag() > 0.0)) throw InvalidTau();
        if (!(tol > 0.0 && tol < 0.01))
            throw Error("LatticeTau: tol must lie in (0, 0.01)");
    }

    bool operator==(const LatticeTau& o) const { return tau == o.tau; }
};

/// A point of the torus in its canonical fundamental-cell representative
/// z = s + r*tau with r, s in [0,1).
struct TorusPoint {
    cplx z;
};

/// Lattice coordinates (s, r) of z with respect to (1, tau): z = s + r*tau.
std::pair<double, double> lattice_coords(const LatticeTau& lat, cplx z);

/// Reduce z modulo the lattice to the canonical representative; coefficients
/// within tol of 1 wrap to 0 so boundary points have a stable normal form.
TorusPoint reduce_mod_lattice(const LatticeTau& lat, cplx z);

TorusPoint torus_add(const LatticeTau& lat, TorusPoint a, TorusPoint b);
TorusPoint torus_neg(const LatticeTau& lat, TorusPoint a);

/// Distance between torus classes: minimum over the 9 nearest lattice
/// translates of the Euclidean distance between representatives.
double torus_dist(const LatticeTau& lat, TorusPoint a, TorusPoint b);
bool torus_eq(const LatticeTau& lat, TorusPoint a, TorusPoint b);
bool torus_eq(const LatticeTau& lat, TorusPoint a, TorusPoint b, double tol);

/// The four 2-torsion points {0, 1/2, tau/2, (1+tau)/2}, indexed i = 1..4
/// in this order.
std::array<TorusPoint, 4> two_torsion_points(const LatticeTau& lat);

struct HalfSum {
    TorusPoint canonical;            ///< midpoint of the canonical representatives
    std::array<TorusPoint, 4> all;   ///< all four solutions of 2e = p + q
};

/// The solutions e of 2e = p + q. The canonical one is the midpoint
/// (p_rep + q_rep)/2 of the reduced representatives (symmetric in p, q);
/// the other three differ by 2-torsion.
HalfSum half_sum(const LatticeTau& lat, TorusPoint p, TorusPoint q);

/// Translation by delta on the Jacobian (the group law itself).
TorusPoint translate(const LatticeTau& lat, TorusPoint lam, TorusPoint delta);

}  // namespace parmod
