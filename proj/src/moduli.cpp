#include "parmod/moduli.hpp"

#include <cmath>

namespace parmod {

namespace {

ProjPoint pillow_at(const WeierstrassContext& ctx, cplx z) {
    return pillowcase_map(ctx, reduce_mod_lattice(ctx.lattice(), z));
}

void require_marks_at(const ModuliConfig& cfg, const ParabolicBundle& pb,
                      std::size_t n) {
    if (pb.marks().size() != n)
        throw Error("moduli: bundle carries the wrong number of marks");
    const TorusPoint pts[3] = {cfg.p1(), cfg.p2(), cfg.p3()};
    for (std::size_t i = 0; i < n; ++i)
        if (!torus_eq(cfg.lattice(), pb.marks()[i].at, pts[i]))
            throw Error("moduli: marks must sit at the configured points");
}

ProjPoint bundle_pillowcase(const ModuliConfig& cfg, const BundleClass& E) {
    // S-equivalence sends both torsion classes over lam_i to p(lam_i).
    return pillow_at(cfg.ctx(), E.lam().z);
}

}  // namespace

TorusPoint canonical_sign(const LatticeTau& lat, TorusPoint lam) {
    const TorusPoint neg = torus_neg(lat, lam);
    const auto [s1, r1] = lattice_coords(lat, lam.z);
    const auto [s2, r2] = lattice_coords(lat, neg.z);
    if (std::abs(r1 - r2) > 1e-9) return r1 < r2 ? lam : neg;
    return s1 <= s2 ? lam : neg;
}

ModuliConfig::ModuliConfig(const WeierstrassContext& ctx, TorusPoint p1,
                           TorusPoint p2, TorusPoint p3)
    : ctx_(&ctx) {
    const LatticeTau& lat = ctx.lattice();
    p1_ = reduce_mod_lattice(lat, p1.z);
    p2_ = reduce_mod_lattice(lat, p2.z);
    p3_ = reduce_mod_lattice(lat, p3.z);
    if (torus_dist(lat, p1_, p2_) <= 10.0 * lat.tol ||
        torus_dist(lat, p2_, p3_) <= 10.0 * lat.tol ||
        torus_dist(lat, p1_, p3_) <= 10.0 * lat.tol)
        throw Error("ModuliConfig: marked points must be pairwise distinct");
    e1_ = half_sum(lat, p2_, p3_).canonical;
    e2_ = half_sum(lat, p3_, p1_).canonical;
    e3_ = half_sum(lat, p1_, p2_).canonical;
}

ModuliTriple pi_map(const ModuliConfig& cfg, const ParabolicBundle& pb) {
    require_marks_at(cfg, pb, 3);
    if (classify_stability(pb).verdict != Stability::Stable)
        throw NotStable("pi_map requires a stable bundle");
    const auto& mk = pb.marks();
    const ProjPoint c1 = bundle_pillowcase(cfg, pb.bundle());
    const ProjPoint c2 = hecke_point(
        cfg.ctx(), {pb.bundle(), cfg.p1(), cfg.p3(), mk[0].coord, mk[2].coord,
                    cfg.e2()});
    const ProjPoint c3 = hecke_point(
        cfg.ctx(), {pb.bundle(), cfg.p2(), cfg.p3(), mk[1].coord, mk[2].coord,
                    cfg.e1()});
    return {c1, c2, c3};
}

ModuliTriple f_embed(const ModuliConfig& cfg, TorusPoint lam) {
    const cplx z = reduce_mod_lattice(cfg.lattice(), lam.z).z;
    return {pillow_at(cfg.ctx(), z),
            pillow_at(cfg.ctx(), z + cfg.p3().z - cfg.e2().z),
            pillow_at(cfg.ctx(), z + cfg.p3().z - cfg.e1().z)};
}

TorusPoint pi_tilde_1(const ModuliConfig& cfg, const ParabolicBundle& pb) {
    require_marks_at(cfg, pb, 3);
    const ParabolicBundle cpb = canonical_form(cfg.lattice(), pb);
    if (!line_is_bad(cpb.bundle(), cpb.marks()[2]))
        throw NotBadLocus("pi_tilde_1: the line at p3 is good");
    return cpb.bundle().lam();
}

ProjPoint h_bad(const ModuliConfig& cfg, const ParabolicBundle& pb) {
    require_marks_at(cfg, pb, 3);
    const auto& mk = pb.marks();
    return hecke_point(cfg.ctx(), {pb.bundle(), cfg.p1(), cfg.p2(),
                                   mk[0].coord, mk[1].coord, cfg.e3()});
}

LocusTag locate(const ModuliConfig& cfg, const ModuliTriple& t) {
    const double curve_tol = 100.0 * cfg.lattice().tol;
    const auto [lam_p, lam_m] = pillowcase_preimages(cfg.ctx(), t.c1);
    for (const TorusPoint& cand : {lam_p, lam_m}) {
        const ModuliTriple ft = f_embed(cfg, cand);
        if (chordal(ft.c1, t.c1) < curve_tol && chordal(ft.c2, t.c2) < curve_tol &&
            chordal(ft.c3, t.c3) < curve_tol)
            return {LocusTag::Kind::OnCurve, cand};
    }
    return {LocusTag::Kind::GoodLocus, TorusPoint{cplx(0.0)}};
}

namespace {

// Solve l from the family-coordinate value x cut out by the generator:
// split convention x = l3/l (reference l3 = 1), nonsplit x = l3 - l
// (reference l3 = 0).
ProjPoint split_line_from(const ProjPoint& x) {
    if (x.is_inf()) return ProjPoint(cplx(0.0));
    if (x.value() == cplx(0.0)) return ProjPoint::infinity();
    return ProjPoint(1.0 / x.value());
}

ProjPoint nonsplit_line_from(const ProjPoint& x) {
    if (x.is_inf()) return ProjPoint::infinity();
    return ProjPoint(-x.value());
}

}  // namespace

ParabolicBundle invert_good(const ModuliConfig& cfg, const ModuliTriple& t) {
    const WeierstrassContext& ctx = cfg.ctx();
    const LatticeTau& lat = cfg.lattice();
    if (locate(cfg, t).kind != LocusTag::Kind::GoodLocus)
        throw OnCurveInput("invert_good: triple lies on the embedded curve");

    const double curve_tol = 100.0 * lat.tol;
    const auto branch = pillowcase_branch_values(ctx);
    int branch_idx = 0;
    for (int i = 1; i <= 4; ++i)
        if (chordal(t.c1, branch[i - 1]) < curve_tol) branch_idx = i;

    const ProjPoint one(cplx(1.0)), zero(cplx(0.0));
    BundleClass E = branch_idx == 0
                        ? BundleClass::split_generic(
                              lat, canonical_sign(
                                       lat, pillowcase_preimages(ctx, t.c1).first))
                        : BundleClass::nonsplit(lat, branch_idx);
    const ProjPoint l3 = branch_idx == 0 ? one : zero;

    const MobiusMap m2 = hecke_generator(
        ctx, {E, cfg.p1(), cfg.p3(), one, one, cfg.e2()});
    const MobiusMap m3 = hecke_generator(
        ctx, {E, cfg.p2(), cfg.p3(), one, one, cfg.e1()});
    const ProjPoint x2 = m2.inverse().apply(t.c2);
    const ProjPoint x3 = m3.inverse().apply(t.c3);
    const ProjPoint l1 =
        branch_idx == 0 ? split_line_from(x2) : nonsplit_line_from(x2);
    const ProjPoint l2 =
        branch_idx == 0 ? split_line_from(x3) : nonsplit_line_from(x3);

    const ParabolicBundle pb(lat, E,
                             {{cfg.p1(), l1}, {cfg.p2(), l2}, {cfg.p3(), l3}});
    if (classify_stability(pb).verdict != Stability::Stable)
        throw NotStable("invert_good: reconstruction is unstable");
    return canonical_form(lat, pb);
}

ParabolicBundle invert_bad(const ModuliConfig& cfg, TorusPoint lam,
                           const ProjPoint& m) {
    const WeierstrassContext& ctx = cfg.ctx();
    const LatticeTau& lat = cfg.lattice();
    const double match_tol = 100.0 * lat.tol;
    lam = reduce_mod_lattice(lat, lam.z);

    int torsion_idx = 0;
    const auto tors = two_torsion_points(lat);
    for (int i = 1; i <= 4; ++i)
        if (torus_eq(lat, lam, tors[i - 1])) torsion_idx = i;

    const ProjPoint one(cplx(1.0)), zero(cplx(0.0));
    const ProjPoint inf = ProjPoint::infinity();
    ParabolicBundle result = [&]() -> ParabolicBundle {
        if (torsion_idx == 0) {
            const BundleClass E = BundleClass::split_generic(lat, lam);
            if (chordal(m, pillow_at(ctx, lam.z + cfg.e3().z - cfg.p1().z)) <
                match_tol)
                return ParabolicBundle(lat, E,
                                       {{cfg.p1(), zero}, {cfg.p2(), one},
                                        {cfg.p3(), inf}});
            if (chordal(m, pillow_at(ctx, lam.z + cfg.e3().z - cfg.p2().z)) <
                match_tol)
                return ParabolicBundle(lat, E,
                                       {{cfg.p1(), one}, {cfg.p2(), zero},
                                        {cfg.p3(), inf}});
            const MobiusMap g = hecke_generator(
                ctx, {E, cfg.p1(), cfg.p2(), one, one, cfg.e3()});
            const ProjPoint l2 = g.inverse().apply(m);   // = l2/l1 with l1 = 1
            return ParabolicBundle(lat, E,
                                   {{cfg.p1(), one}, {cfg.p2(), l2},
                                    {cfg.p3(), inf}});
        }
        const TorusPoint lam_i = tors[torsion_idx - 1];
        if (chordal(m, pillow_at(ctx, lam_i.z + cfg.p1().z - cfg.e3().z)) <
            match_tol)
            return ParabolicBundle(lat, BundleClass::split_torsion(lat, torsion_idx),
                                   {{cfg.p1(), zero}, {cfg.p2(), one},
                                    {cfg.p3(), inf}});
        const BundleClass E = BundleClass::nonsplit(lat, torsion_idx);
        const MobiusMap g = hecke_generator(
            ctx, {E, cfg.p1(), cfg.p2(), zero, zero, cfg.e3()});
        const ProjPoint l2 = g.inverse().apply(m);   // = l2 - l1 with l1 = 0
        return ParabolicBundle(lat, E,
                               {{cfg.p1(), zero}, {cfg.p2(), l2},
                                {cfg.p3(), inf}});
    }();

    const double residual = chordal(h_bad(cfg, result), m);
    if (!(residual < 1e-6))
        throw ToleranceFailure("invert_bad: fiber-coordinate residual above 1e-6");
    return canonical_form(lat, result);
}

std::pair<ProjPoint, ProjPoint> m2_map(const ModuliConfig& cfg,
                                       const ParabolicBundle& pb2) {
    require_marks_at(cfg, pb2, 2);
    if (classify_stability(pb2).verdict == Stability::Unstable)
        throw BadSameDirection("m2_map requires a semistable 2-marked bundle");
    const auto& mk = pb2.marks();
    return {bundle_pillowcase(cfg, pb2.bundle()),
            hecke_point(cfg.ctx(), {pb2.bundle(), cfg.p1(), cfg.p2(),
                                    mk[0].coord, mk[1].coord, cfg.e3()})};
}

}  // namespace parmod
