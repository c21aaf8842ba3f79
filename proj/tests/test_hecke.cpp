#include <doctest.h>

#include <cmath>

#include "parmod/hecke.hpp"

using namespace parmod;

namespace {
const LatticeTau kLat{cplx(0.3, 1.1), 1e-9};

struct Fixture {
    WeierstrassContext ctx{kLat};
    TorusPoint p = reduce_mod_lattice(kLat, 0.15 + 0.1 * kLat.tau);
    TorusPoint q = reduce_mod_lattice(kLat, 0.62 + 0.45 * kLat.tau);
    TorusPoint e = half_sum(kLat, p, q).canonical;
    TorusPoint lam = reduce_mod_lattice(kLat, 0.21 + 0.33 * kLat.tau);

    ProjPoint pillow(cplx z) const {
        return pillowcase_map(ctx, reduce_mod_lattice(kLat, z));
    }
};
}  // namespace

TEST_CASE("query validation") {
    const Fixture f;
    const BundleClass E = BundleClass::split_generic(kLat, f.lam);
    const ProjPoint l(cplx(1.0));
    // p = q is not a valid modification pair.
    CHECK_THROWS_AS(hecke_point(f.ctx, {E, f.p, f.p, l, l, f.p}), Error);
    // e must solve 2e = p + q.
    CHECK_THROWS_AS(
        hecke_point(f.ctx, {E, f.p, f.q, l, l, reduce_mod_lattice(kLat, f.e.z + 0.1)}),
        Error);
    // Both lines bad in the same direction: the result leaves the stable range.
    CHECK_THROWS_AS(hecke_point(f.ctx, {E, f.p, f.q, ProjPoint::infinity(),
                                        ProjPoint::infinity(), f.e}),
                    BadSameDirection);
    const BundleClass ns = BundleClass::nonsplit(kLat, 2);
    CHECK_THROWS_AS(hecke_point(f.ctx, {ns, f.p, f.q, ProjPoint::infinity(),
                                        ProjPoint::infinity(), f.e}),
                    BadSameDirection);
    // The torsion stratum has no line generator to fit.
    const BundleClass tors = BundleClass::split_torsion(kLat, 1);
    CHECK_THROWS_AS(
        hecke_generator(f.ctx, {tors, f.p, f.q, l, l, f.e}), Error);
}

TEST_CASE("bad-line fast paths match the displayed translate formulas") {
    const Fixture f;
    const BundleClass E = BundleClass::split_generic(kLat, f.lam);
    const ProjPoint good(cplx(0.8, 0.4));

    // Line at p in the L-direction: translate by p - e.
    CHECK(chordal(hecke_point(f.ctx, {E, f.p, f.q, ProjPoint::infinity(), good, f.e}),
                  f.pillow(f.lam.z + f.p.z - f.e.z)) < 1e-10);
    // Line at p in the L^{-1}-direction: translate by e - p.
    CHECK(chordal(hecke_point(f.ctx, {E, f.p, f.q, ProjPoint(cplx(0.0)), good, f.e}),
                  f.pillow(f.lam.z + f.e.z - f.p.z)) < 1e-10);
    // Bad line at q instead.
    CHECK(chordal(hecke_point(f.ctx, {E, f.p, f.q, good, ProjPoint::infinity(), f.e}),
                  f.pillow(f.lam.z + f.q.z - f.e.z)) < 1e-10);
    CHECK(chordal(hecke_point(f.ctx, {E, f.p, f.q, good, ProjPoint(cplx(0.0)), f.e}),
                  f.pillow(f.lam.z + f.e.z - f.q.z)) < 1e-10);

    // Nonsplit: only the L_i-direction is bad.
    for (int i = 1; i <= 4; ++i) {
        const BundleClass ns = BundleClass::nonsplit(kLat, i);
        const TorusPoint li = two_torsion_points(kLat)[i - 1];
        CHECK(chordal(
                  hecke_point(f.ctx, {ns, f.p, f.q, ProjPoint::infinity(), good, f.e}),
                  f.pillow(li.z + f.p.z - f.e.z)) < 1e-10);
        CHECK(chordal(
                  hecke_point(f.ctx, {ns, f.p, f.q, good, ProjPoint::infinity(), f.e}),
                  f.pillow(li.z + f.q.z - f.e.z)) < 1e-10);
    }

    // Split torsion: the value is independent of both lines, but equal
    // coordinates mean the same constant subbundle and are rejected.
    for (int i = 1; i <= 4; ++i) {
        const BundleClass tors = BundleClass::split_torsion(kLat, i);
        const TorusPoint li = two_torsion_points(kLat)[i - 1];
        const ProjPoint expect = f.pillow(li.z + f.p.z - f.e.z);
        CHECK(chordal(hecke_point(f.ctx, {tors, f.p, f.q, good,
                                          ProjPoint(cplx(-0.3, 1.1)), f.e}),
                      expect) < 1e-10);
        CHECK(chordal(hecke_point(f.ctx,
                                  {tors, f.p, f.q, ProjPoint(cplx(7.0)),
                                   ProjPoint(cplx(0.0, -2.0)), f.e}),
                      expect) < 1e-10);
        CHECK_THROWS_AS(hecke_point(f.ctx, {tors, f.p, f.q, good, good, f.e}),
                        BadSameDirection);
    }
}

TEST_CASE("good-line path approaches the bad-line limits") {
    const Fixture f;
    const BundleClass E = BundleClass::split_generic(kLat, f.lam);
    const ProjPoint good(cplx(0.8, 0.4));
    const double eps = 1e-12;
    const ProjPoint near_inf(1.0 / eps), near_zero(eps);

    CHECK(chordal(hecke_point(f.ctx, {E, f.p, f.q, near_inf, good, f.e}),
                  f.pillow(f.lam.z + f.p.z - f.e.z)) < 1e-6);
    CHECK(chordal(hecke_point(f.ctx, {E, f.p, f.q, near_zero, good, f.e}),
                  f.pillow(f.lam.z + f.e.z - f.p.z)) < 1e-6);

    const BundleClass ns = BundleClass::nonsplit(kLat, 3);
    const TorusPoint l3 = two_torsion_points(kLat)[2];
    CHECK(chordal(hecke_point(f.ctx, {ns, f.p, f.q, near_inf, good, f.e}),
                  f.pillow(l3.z + f.p.z - f.e.z)) < 1e-6);
}

TEST_CASE("symmetry and gauge invariance of the evaluator") {
    const Fixture f;
    const BundleClass E = BundleClass::split_generic(kLat, f.lam);
    for (int k = 0; k < 10; ++k) {
        const ProjPoint lp(std::exp(cplx(0.0, 0.6 * k)) * (0.7 + 0.1 * k));
        const ProjPoint lq(std::exp(cplx(0.0, 1.1 * k + 0.3)) * (0.5 + 0.13 * k));
        const ProjPoint h = hecke_point(f.ctx, {E, f.p, f.q, lp, lq, f.e});
        CHECK(chordal(h, hecke_point(f.ctx, {E, f.q, f.p, lq, lp, f.e})) < 1e-7);
        const cplx c(0.0, 2.3);
        CHECK(chordal(h, hecke_point(f.ctx, {E, f.p, f.q,
                                             ProjPoint(c * lp.value()),
                                             ProjPoint(c * lq.value()), f.e})) < 1e-7);
    }
    const BundleClass ns = BundleClass::nonsplit(kLat, 2);
    for (int k = 0; k < 10; ++k) {
        const ProjPoint lp(cplx(-1.5 + 0.3 * k, 0.8 - 0.2 * k));
        const ProjPoint lq(cplx(0.4 + 0.21 * k, -1.0 + 0.17 * k));
        const ProjPoint h = hecke_point(f.ctx, {ns, f.p, f.q, lp, lq, f.e});
        CHECK(chordal(h, hecke_point(f.ctx, {ns, f.q, f.p, lq, lp, f.e})) < 1e-7);
        const cplx b(1.0, -2.0);
        CHECK(chordal(h, hecke_point(f.ctx, {ns, f.p, f.q,
                                             ProjPoint(lp.value() + b),
                                             ProjPoint(lq.value() + b), f.e})) < 1e-7);
    }
}

TEST_CASE("the generator acts as a Mobius map on lines") {
    const Fixture f;
    const BundleClass E = BundleClass::split_generic(kLat, f.lam);
    const HeckeQuery query{E, f.p, f.q, ProjPoint(cplx(1.0)), ProjPoint(cplx(1.0)),
                           f.e};
    const MobiusMap gen = hecke_generator(f.ctx, query);

    // The evaluator's good-good path is exactly application of the generator
    // to lq/lp for the split class.
    for (int k = 0; k < 6; ++k) {
        const cplx lp = std::exp(cplx(0.0, 0.9 * k)) * (0.6 + 0.12 * k);
        const cplx lq = std::exp(cplx(0.0, 0.4 * k + 1.0)) * (0.9 + 0.07 * k);
        const ProjPoint h =
            hecke_point(f.ctx, {E, f.p, f.q, ProjPoint(lp), ProjPoint(lq), f.e});
        CHECK(chordal(h, gen.apply(ProjPoint(lq / lp))) < 1e-9);
    }

    // A fit from a disjoint seed run gives the same map.
    const MobiusMap gen2 = hecke_generator(f.ctx, query, 17);
    for (int k = 0; k < 8; ++k) {
        const ProjPoint x(cplx(-1.6 + 0.4 * k, 1.2 - 0.3 * k));
        CHECK(chordal(gen.apply(x), gen2.apply(x)) < 1e-8);
    }
}

TEST_CASE("split sample families are elliptic in the probe point") {
    const Fixture f;
    for (int k = 0; k < 6; ++k) {
        const TorusPoint a =
            reduce_mod_lattice(kLat, (0.31 + 0.09 * k) + (0.17 + 0.12 * k) * kLat.tau);
        const auto [w0, r0] = split_sample(f.ctx, f.lam, f.p, f.q, a);
        const auto [w1, r1] =
            split_sample(f.ctx, f.lam, f.p, f.q, TorusPoint{a.z + 1.0});
        const auto [w2, r2] =
            split_sample(f.ctx, f.lam, f.p, f.q, TorusPoint{a.z + kLat.tau});
        CHECK(chordal(w0, w1) < 1e-9);
        CHECK(chordal(w0, w2) < 1e-9);
        CHECK(chordal(r0, r1) < 1e-9);
        CHECK(chordal(r0, r2) < 1e-9);

        const auto [d0, s0] = nonsplit_sample(f.ctx, 1, f.p, f.q, a);
        const auto [d1, s1] =
            nonsplit_sample(f.ctx, 1, f.p, f.q, TorusPoint{a.z + kLat.tau});
        CHECK(chordal(d0, d1) < 1e-9);
        CHECK(chordal(s0, s1) < 1e-9);
    }
}
