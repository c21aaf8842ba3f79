#include "parmod/hecke.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace parmod {

namespace {

ProjPoint pillow_at(const WeierstrassContext& ctx, cplx z) {
    return pillowcase_map(ctx, reduce_mod_lattice(ctx.lattice(), z));
}

ProjPoint finite_or_inf(cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        return ProjPoint::infinity();
    return ProjPoint(v);
}

// Family samples with the twist point e supplied explicitly (the public
// wrappers fix e to the canonical half-sum; hecke_point passes the query's).

std::pair<ProjPoint, ProjPoint> split_sample_at(const WeierstrassContext& ctx,
                                                TorusPoint lam, TorusPoint p,
                                                TorusPoint q, TorusPoint e,
                                                TorusPoint a) {
    const cplx two_lam = 2.0 * lam.z;
    const cplx num = sigma_w(ctx, q.z - a.z) * sigma_w(ctx, p.z - a.z + two_lam);
    const cplx den = sigma_w(ctx, p.z - a.z) * sigma_w(ctx, q.z - a.z + two_lam);
    const ProjPoint w =
        (den == cplx(0.0)) ? ProjPoint::infinity() : finite_or_inf(num / den);
    return {w, pillow_at(ctx, lam.z - a.z + e.z)};
}

std::pair<ProjPoint, ProjPoint> nonsplit_sample_at(const WeierstrassContext& ctx,
                                                   TorusPoint lam_i, TorusPoint p,
                                                   TorusPoint q, TorusPoint e,
                                                   TorusPoint a) {
    const ProjPoint zq = zeta_w(ctx, q.z - a.z);
    const ProjPoint zp = zeta_w(ctx, p.z - a.z);
    const ProjPoint d = (zq.is_inf() || zp.is_inf())
                            ? ProjPoint::infinity()
                            : finite_or_inf(zq.value() - zp.value());
    return {d, pillow_at(ctx, lam_i.z - a.z + e.z)};
}

MobiusMap fit_generator(const WeierstrassContext& ctx, bool split,
                        TorusPoint lam, TorusPoint p, TorusPoint q,
                        TorusPoint e, int seed_offset,
                        const std::vector<TorusPoint>& avoid) {
    const LatticeTau& lat = ctx.lattice();
    const cplx stride = 0.137 + 0.211 * ctx.tau();
    std::array<ProjPoint, 3> ins, outs;
    int got = 0;
    int k = 1 + seed_offset;
    for (int tries = 0; got < 3 && tries < 64; ++tries, ++k) {
        const TorusPoint a = reduce_mod_lattice(lat, e.z + stride * double(k));
        bool skip = false;
        for (const TorusPoint& x : avoid)
            if (torus_eq(lat, a, x, 10.0 * lat.tol)) skip = true;
        if (skip) continue;
        const auto [wv, rv] = split ? split_sample_at(ctx, lam, p, q, e, a)
                                    : nonsplit_sample_at(ctx, lam, p, q, e, a);
        for (int i = 0; i < got; ++i)
            if (separation(wv, ins[i]) < 0.1 || separation(rv, outs[i]) < 0.1)
                skip = true;
        if (skip) continue;
        ins[got] = wv;
        outs[got] = rv;
        ++got;
    }
    if (got < 3)
        throw DegenerateSamples(
            "hecke: seed schedule exhausted without three well-separated "
            "family samples");
    return mobius_from_three(ins, outs, lat.tol);
}

void validate_query(const WeierstrassContext& ctx, const HeckeQuery& query) {
    const LatticeTau& lat = ctx.lattice();
    if (torus_eq(lat, query.p, query.q))
        throw Error("HeckeQuery: marked points p and q must be distinct");
    const TorusPoint ee = torus_add(lat, query.e, query.e);
    const TorusPoint pq = torus_add(lat, query.p, query.q);
    if (!torus_eq(lat, ee, pq))
        throw Error("HeckeQuery: e must satisfy 2e = p + q on the torus");
    if (bad_same_direction(query.E, MarkedLine{query.p, query.lp},
                           MarkedLine{query.q, query.lq}))
        throw BadSameDirection(
            "hecke_point: lines bad in the same direction give an unstable "
            "modification");
}

}  // namespace

std::pair<ProjPoint, ProjPoint> split_sample(const WeierstrassContext& ctx,
                                             TorusPoint lam, TorusPoint p,
                                             TorusPoint q, TorusPoint a) {
    return split_sample_at(ctx, lam, p, q,
                           half_sum(ctx.lattice(), p, q).canonical, a);
}

std::pair<ProjPoint, ProjPoint> nonsplit_sample(const WeierstrassContext& ctx,
                                                int i, TorusPoint p,
                                                TorusPoint q, TorusPoint a) {
    const TorusPoint lam_i = two_torsion_points(ctx.lattice())[i - 1];
    return nonsplit_sample_at(ctx, lam_i, p, q,
                              half_sum(ctx.lattice(), p, q).canonical, a);
}

MobiusMap hecke_generator(const WeierstrassContext& ctx, const HeckeQuery& query,
                          int seed_offset) {
    validate_query(ctx, query);
    const LatticeTau& lat = ctx.lattice();
    const TorusPoint lam = query.E.lam();
    switch (query.E.kind()) {
        case BundleKind::SplitGeneric: {
            const std::vector<TorusPoint> avoid = {
                query.p, query.q,
                reduce_mod_lattice(lat, query.p.z + 2.0 * lam.z),
                reduce_mod_lattice(lat, query.q.z + 2.0 * lam.z)};
            return fit_generator(ctx, true, lam, query.p, query.q, query.e,
                                 seed_offset, avoid);
        }
        case BundleKind::NonSplit:
            return fit_generator(ctx, false, lam, query.p, query.q, query.e,
                                 seed_offset, {query.p, query.q});
        case BundleKind::SplitTorsion:
            throw Error("hecke_generator: SplitTorsion has no line generator");
    }
    throw Error("hecke_generator: unreachable");
}

ProjPoint hecke_point(const WeierstrassContext& ctx, const HeckeQuery& query) {
    validate_query(ctx, query);
    const cplx lam = query.E.lam().z;
    const cplx p = query.p.z, q = query.q.z, e = query.e.z;
    const ProjPoint zero(cplx(0.0));

    switch (query.E.kind()) {
        case BundleKind::SplitTorsion:
            // Every line is bad; the class of the modification does not
            // depend on the chosen lines.
            return pillow_at(ctx, lam + p - e);
        case BundleKind::SplitGeneric: {
            if (query.lp.is_inf()) return pillow_at(ctx, lam + p - e);
            if (query.lp == zero) return pillow_at(ctx, lam + e - p);
            if (query.lq.is_inf()) return pillow_at(ctx, lam + q - e);
            if (query.lq == zero) return pillow_at(ctx, lam + e - q);
            const MobiusMap gen = hecke_generator(ctx, query, 0);
            return gen.apply(ProjPoint(query.lq.value() / query.lp.value()));
        }
        case BundleKind::NonSplit: {
            if (query.lp.is_inf()) return pillow_at(ctx, lam + p - e);
            if (query.lq.is_inf()) return pillow_at(ctx, lam + q - e);
            const MobiusMap gen = hecke_generator(ctx, query, 0);
            return gen.apply(ProjPoint(query.lq.value() - query.lp.value()));
        }
    }
    throw Error("hecke_point: unreachable");
}

}  // namespace parmod
