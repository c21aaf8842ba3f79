#pragma once

#include <utility>

#include "parmod/hecke.hpp"
#include "parmod/parabolic.hpp"
#include "parmod/projective.hpp"
#include "parmod/weierstrass.hpp"

namespace parmod {

/// The three marked points p1, p2, p3 on X together with the half-sum
/// points e1, e2, e3 (2e1 = p2 + p3, 2e2 = p3 + p1, 2e3 = p1 + p2, each
/// the canonical half_sum) that fix the degree-0 twists used by the
/// moduli maps. Holds a pointer to the Weierstrass context, which must
/// outlive the config.
class ModuliConfig {
  public:
    ModuliConfig(const WeierstrassContext& ctx, TorusPoint p1, TorusPoint p2,
                 TorusPoint p3);

    const WeierstrassContext& ctx() const { return *ctx_; }
    const LatticeTau& lattice() const { return ctx_->lattice(); }
    TorusPoint p1() const { return p1_; }
    TorusPoint p2() const { return p2_; }
    TorusPoint p3() const { return p3_; }
    TorusPoint e1() const { return e1_; }
    TorusPoint e2() const { return e2_; }
    TorusPoint e3() const { return e3_; }

  private:
    const WeierstrassContext* ctx_;
    TorusPoint p1_, p2_, p3_, e1_, e2_, e3_;
};

/// Image point of the embedding into (CP^1)^3; equality is componentwise
/// chordal comparison.
struct ModuliTriple {
    ProjPoint c1, c2, c3;
};

/// Result of locating a triple relative to the embedded curve f(Jac(X)).
struct LocusTag {
    enum class Kind { GoodLocus, OnCurve };
    Kind kind;
    TorusPoint lam{};   ///< the curve parameter; meaningful only for OnCurve
};

/// The canonical representative of the pillowcase fiber {lam, -lam}: the
/// one whose tau-coefficient r is smaller than 1/2, ties broken by the
/// real coefficient s. Fixes the presentation ambiguity L <-> L^{-1} of a
/// split class reconstructed from its pillowcase value.
TorusPoint canonical_sign(const LatticeTau& lat, TorusPoint lam);

/// The embedding pi of the moduli space of stable 3-marked bundles:
/// ([E], h_{e2}(E, l_{p1}, l_{p3}), h_{e1}(E, l_{p2}, l_{p3})). The marks
/// of pb must sit at (p1, p2, p3) in order; pb must be stable.
ModuliTriple pi_map(const ModuliConfig& cfg, const ParabolicBundle& pb);

/// The curve f: Jac(X) -> (CP^1)^3 whose image is pi of the bad locus:
/// lam -> (p(lam), p(lam + p3 - e2), p(lam + p3 - e1)) with p the
/// pillowcase map.
ModuliTriple f_embed(const ModuliConfig& cfg, TorusPoint lam);

/// The Jacobian lift of a bad-locus element (l_{p3} bad): the class [L]
/// of the degree-0 subbundle containing l_{p3}, i.e. lam after
/// canonicalization for SplitGeneric and lam_i for the torsion classes.
/// Throws NotBadLocus when l_{p3} is good.
TorusPoint pi_tilde_1(const ModuliConfig& cfg, const ParabolicBundle& pb);

/// The fiber coordinate of the bad locus over its Jacobian lift:
/// h_{e3}(E, l_{p1}, l_{p2}).
ProjPoint h_bad(const ModuliConfig& cfg, const ParabolicBundle& pb);

/// Decide whether a triple lies on the embedded curve: compute the
/// pillowcase fiber +-lam of c1 and accept OnCurve(lam) when f_embed
/// matches componentwise within 100x the base tolerance.
LocusTag locate(const ModuliConfig& cfg, const ModuliTriple& t);

/// Reconstruct the unique stable bundle with good l_{p3} mapping to a
/// good-locus triple: bundle class from c1 (canonical-sign SplitGeneric,
/// or NonSplit at branch values), reference l_{p3} in canonical gauge,
/// and the other two lines by Moebius inversion of the family generators.
/// Throws OnCurveInput for triples on the curve, NotStable when the
/// reconstruction is unstable (t outside the image).
ParabolicBundle invert_good(const ModuliConfig& cfg, const ModuliTriple& t);

/// Reconstruct the bad-locus element with pi_tilde_1 = lam and
/// h_bad = m, following the stratum casework; throws ToleranceFailure if
/// the reconstruction misses m by more than 1e-6.
ParabolicBundle invert_bad(const ModuliConfig& cfg, TorusPoint lam,
                           const ProjPoint& m);

/// The 2-marked comparison map [E, l_{p1}, l_{p2}] -> ([E], h_{e3}(E,
/// l_{p1}, l_{p2})) onto CP^1 x CP^1; pb2 must carry exactly the marks
/// (p1, p2) and be semistable (throws BadSameDirection otherwise).
std::pair<ProjPoint, ProjPoint> m2_map(const ModuliConfig& cfg,
                                       const ParabolicBundle& pb2);

}  // namespace parmod
