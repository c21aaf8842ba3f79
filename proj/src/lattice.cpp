#include "parmod/lattice.hpp"

#include <cmath>

namespace parmod {

std::pair<double, double> lattice_coords(const LatticeTau& lat, cplx z) {
    const double r = z.imag() / lat.tau.imag();
    const double s = z.real() - r * lat.tau.real();
    return {s, r};
}

namespace {

// Fractional part in [0,1) with wrap-to-0 for values within tol of the
// upper boundary, so representatives of boundary points do not flap.
double frac01(double x, double tol) {
    double f = x - std::floor(x);
    if (f >= 1.0 - tol) f = 0.0;
    return f;
}

}  // namespace

TorusPoint reduce_mod_lattice(const LatticeTau& lat, cplx z) {
    auto [s, r] = lattice_coords(lat, z);
    const double rf = frac01(r, lat.tol);
    const double sf = frac01(s, lat.tol);
    return TorusPoint{sf + rf * lat.tau};
}

TorusPoint torus_add(const LatticeTau& lat, TorusPoint a, TorusPoint b) {
    return reduce_mod_lattice(lat, a.z + b.z);
}

TorusPoint torus_neg(const LatticeTau& lat, TorusPoint a) {
    return reduce_mod_lattice(lat, -a.z);
}

double torus_dist(const LatticeTau& lat, TorusPoint a, TorusPoint b) {
    double best = std::abs(a.z - b.z);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n)
            best = std::min(best,
                            std::abs(a.z - b.z + double(m) + double(n) * lat.tau));
    return best;
}

bool torus_eq(const LatticeTau& lat, TorusPoint a, TorusPoint b) {
    return torus_dist(lat, a, b) < lat.tol;
}

bool torus_eq(const LatticeTau& lat, TorusPoint a, TorusPoint b, double tol) {
    return torus_dist(lat, a, b) < tol;
}

std::array<TorusPoint, 4> two_torsion_points(const LatticeTau& lat) {
    return {TorusPoint{cplx(0.0, 0.0)}, TorusPoint{cplx(0.5, 0.0)},
            TorusPoint{lat.tau / 2.0}, TorusPoint{(1.0 + lat.tau) / 2.0}};
}

HalfSum half_sum(const LatticeTau& lat, TorusPoint p, TorusPoint q) {
    HalfSum hs;
    // Midpoint of the canonical representatives already lies in the cell.
    hs.canonical = TorusPoint{(p.z + q.z) / 2.0};
    const auto tors = two_torsion_points(lat);
    for (int i = 0; i < 4; ++i)
        hs.all[i] = torus_add(lat, hs.canonical, tors[i]);
    return hs;
}

TorusPoint translate(const LatticeTau& lat, TorusPoint lam, TorusPoint delta) {
    return torus_add(lat, lam, delta);
}

}  // namespace parmod
