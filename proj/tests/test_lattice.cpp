#include <doctest.h>

#include "parmod/lattice.hpp"

using namespace parmod;

namespace {
const LatticeTau kLat{cplx(0.3, 1.1), 1e-9};
}

TEST_CASE("lattice construction validates tau and tol") {
    CHECK_THROWS_AS(LatticeTau(cplx(0.3, 0.0)), InvalidTau);
    CHECK_THROWS_AS(LatticeTau(cplx(0.3, -1.0)), InvalidTau);
    CHECK_THROWS_AS(LatticeTau(cplx(0.0, 1.0), 0.0), Error);
    CHECK_THROWS_AS(LatticeTau(cplx(0.0, 1.0), 0.5), Error);
    CHECK_NOTHROW(LatticeTau(cplx(0.0, 1.0), 1e-12));
}

TEST_CASE("reduction lands in the fundamental cell") {
    const TorusPoint p = reduce_mod_lattice(kLat, 3.7 + 2.4 * kLat.tau);
    const auto [s, r] = lattice_coords(kLat, p.z);
    CHECK(s == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(r == doctest::Approx(0.4).epsilon(1e-12));

    const TorusPoint q = reduce_mod_lattice(kLat, -0.25 - 0.75 * kLat.tau);
    const auto [s2, r2] = lattice_coords(kLat, q.z);
    CHECK(s2 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("coefficients within tol of 1 wrap to 0") {
    const TorusPoint p =
        reduce_mod_lattice(kLat, (1.0 - 1e-12) + (1.0 - 1e-12) * kLat.tau);
    const auto [s, r] = lattice_coords(kLat, p.z);
    CHECK(s == 0.0);
    CHECK(r == 0.0);
    // Just outside tol stays near 1.
    const TorusPoint q = reduce_mod_lattice(kLat, (1.0 - 1e-7) * kLat.tau);
    CHECK(lattice_coords(kLat, q.z).second > 0.9);
}

TEST_CASE("group operations") {
    const TorusPoint a = reduce_mod_lattice(kLat, 0.31 + 0.62 * kLat.tau);
    const TorusPoint b = reduce_mod_lattice(kLat, 0.83 + 0.55 * kLat.tau);
    const TorusPoint zero{cplx(0.0)};

    CHECK(torus_eq(kLat, torus_add(kLat, a, torus_neg(kLat, a)), zero));
    CHECK(torus_eq(kLat, torus_add(kLat, a, b), torus_add(kLat, b, a)));
    CHECK(torus_eq(kLat, translate(kLat, a, b), torus_add(kLat, a, b)));
    CHECK(torus_dist(kLat, a, b) ==
          doctest::Approx(torus_dist(kLat, b, a)).epsilon(1e-15));
    // Translation invariance of the distance.
    const TorusPoint c = reduce_mod_lattice(kLat, 0.12 + 0.94 * kLat.tau);
    CHECK(torus_dist(kLat, torus_add(kLat, a, c), torus_add(kLat, b, c)) ==
          doctest::Approx(torus_dist(kLat, a, b)).epsilon(1e-9));
}

TEST_CASE("equality sees through lattice translates") {
    const cplx z = 0.4 + 0.9 * kLat.tau;
    const TorusPoint a = reduce_mod_lattice(kLat, z);
    const TorusPoint b = reduce_mod_lattice(kLat, z + 3.0 - 2.0 * kLat.tau);
    CHECK(torus_eq(kLat, a, b));
    CHECK(torus_dist(kLat, a, b) < 1e-12);
    const TorusPoint c = reduce_mod_lattice(kLat, z + 0.5);
    CHECK_FALSE(torus_eq(kLat, a, c));
    CHECK(torus_eq(kLat, a, c, 0.6));
    // Distance across the cell boundary uses the nearest translate.
    const TorusPoint lo = reduce_mod_lattice(kLat, cplx(0.01));
    const TorusPoint hi = reduce_mod_lattice(kLat, cplx(0.99));
    CHECK(torus_dist(kLat, lo, hi) == doctest::Approx(0.02).epsilon(1e-9));
}

TEST_CASE("two-torsion points double to zero") {
    const auto tors = two_torsion_points(kLat);
    CHECK(tors[0].z == cplx(0.0));
    for (const TorusPoint& t : tors) {
        CHECK(torus_eq(kLat, torus_add(kLat, t, t), TorusPoint{cplx(0.0)}));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK_FALSE(torus_eq(kLat, tors[i], tors[j]));
}

TEST_CASE("half sums solve 2e = p + q") {
    const TorusPoint p = reduce_mod_lattice(kLat, 0.23 + 0.81 * kLat.tau);
    const TorusPoint q = reduce_mod_lattice(kLat, 0.67 + 0.29 * kLat.tau);
    const HalfSum hs = half_sum(kLat, p, q);
    const TorusPoint sum = torus_add(kLat, p, q);
    for (const TorusPoint& e : hs.all)
        CHECK(torus_eq(kLat, torus_add(kLat, e, e), sum));
    // The canonical solution is the midpoint of the representatives and is
    // symmetric in p and q.
    CHECK(hs.canonical.z == (p.z + q.z) / 2.0);
    CHECK(torus_eq(kLat, half_sum(kLat, q, p).canonical, hs.canonical));
    // All four solutions are distinct (they differ by 2-torsion).
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK_FALSE(torus_eq(kLat, hs.all[i], hs.all[j]));
}
