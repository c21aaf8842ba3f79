#pragma once

#include <utility>

#include "parmod/parabolic.hpp"
#include "parmod/projective.hpp"
#include "parmod/weierstrass.hpp"

namespace parmod {

/// A Hecke-modification query: the class E, the two marked points p != q
/// with their line coordinates, and the square root e of p + q on the
/// Jacobian (2e = p + q) fixing which degree-0 twist is evaluated.
struct HeckeQuery {
    BundleClass E;
    TorusPoint p, q;
    ProjPoint lp, lq;
    TorusPoint e;
};

/// One sample of the degree -1 subbundle family N_a of L + L^{-1},
/// L = O(lam - 0): returns (w, r) where w = z_q/z_p is the coordinate
/// ratio the family cuts in the fibers over p and q (relative to the
/// convention inf <-> L-direction),
///
///     w(a) = sigma(q-a) sigma(p-a+2 lam) / (sigma(p-a) sigma(q-a+2 lam)),
///
/// and r = pillowcase_map(lam - a + e) is the semistable class of the
/// modified bundle twisted by O(e), with e = half_sum(p, q).canonical.
/// The parameter a must avoid {p, q, p + 2 lam, q + 2 lam}.
std::pair<ProjPoint, ProjPoint> split_sample(const WeierstrassContext& ctx,
                                             TorusPoint lam, TorusPoint p,
                                             TorusPoint q, TorusPoint a);

/// Same for the nonsplit class F_2 x L_i: the family cuts the coordinate
/// difference d(a) = zeta(q-a) - zeta(p-a) (convention inf <-> the
/// L_i-direction), with r = pillowcase_map(lam_i - a + e) and a avoiding
/// {p, q}.
std::pair<ProjPoint, ProjPoint> nonsplit_sample(const WeierstrassContext& ctx,
                                                int i, TorusPoint p,
                                                TorusPoint q, TorusPoint a);

/// The family generator of the query: the Moebius map sending the
/// subbundle-family coordinate (the ratio w for SplitGeneric, the
/// difference d for NonSplit) to the pillowcase class of the modified
/// bundle. Fitted from three samples at the deterministic seed schedule
/// a_k = e + (0.137 + 0.211 tau) k; seed_offset shifts the schedule so
/// disjoint offsets give independently fitted maps. Samples are accepted
/// only when separated by at least 0.1 from those already taken, on both
/// the input and the output side; DegenerateSamples after 64 attempts.
/// SplitTorsion has no generator (every line is bad).
MobiusMap hecke_generator(const WeierstrassContext& ctx, const HeckeQuery& query,
                          int seed_offset = 0);

/// Evaluate h_e(E, l_p, l_q), the semistable class of the double Hecke
/// modification at (p, l_p), (q, l_q) twisted by O(e):
///   - SplitTorsion: pillowcase_map(lam_i + p - e) regardless of lines;
///   - a bad input line short-circuits to the translate formula
///     (SplitGeneric coord inf at x -> lam + x - e, coord 0 -> lam + e - x;
///     NonSplit coord inf at x -> lam_i + x - e);
///   - otherwise apply the fitted generator to lq/lp (SplitGeneric) or
///     lq - lp (NonSplit).
/// Throws BadSameDirection when the two lines are bad in the same
/// direction (the modification is then unstable).
ProjPoint hecke_point(const WeierstrassContext& ctx, const HeckeQuery& query);

}  // namespace parmod
