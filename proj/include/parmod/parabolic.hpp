#pragma once

#include <vector>

#include "parmod/errors.hpp"
#include "parmod/lattice.hpp"
#include "parmod/projective.hpp"

namespace parmod {

/// The three semistable rank-2 classes with trivial determinant:
/// L + L^{-1} with L generic (SplitGeneric), L_i + L_i at a 2-torsion line
/// bundle (SplitTorsion), and the nonsplit extension F_2 x L_i (NonSplit).
enum class BundleKind { SplitGeneric, SplitTorsion, NonSplit };

class BundleClass {
  public:
    /// Split class L + L^{-1} with L = O(lam - 0); lam must not be 2-torsion
    /// (use split_torsion for those fibers).
    static BundleClass split_generic(const LatticeTau& lat, TorusPoint lam);
    /// L_i + L_i at the i-th 2-torsion point, i in 1..4.
    static BundleClass split_torsion(const LatticeTau& lat, int i);
    /// F_2 x L_i, the unique nonsplit extension twisted by L_i, i in 1..4.
    static BundleClass nonsplit(const LatticeTau& lat, int i);

    BundleKind kind() const { return kind_; }
    /// Degree-0 parameter: lam for SplitGeneric, the torsion point lam_i
    /// for the other two kinds.
    const TorusPoint& lam() const { return lam_; }
    /// Torsion index 1..4; throws Error for SplitGeneric.
    int torsion_index() const;

  private:
    BundleClass(BundleKind k, TorusPoint lam, int idx)
        : kind_(k), lam_(lam), index_(idx) {}
    BundleKind kind_;
    TorusPoint lam_;
    int index_;
};

/// A marked point together with the line it selects in the fiber, in the
/// trivialization convention of the Hecke evaluator: for SplitGeneric,
/// inf <-> the L-direction and 0 <-> the L^{-1}-direction; for NonSplit,
/// inf <-> the (L_i)-direction.
struct MarkedLine {
    TorusPoint at;
    ProjPoint coord;
};

/// A bundle class with marked lines at pairwise-distinct points and a
/// common small weight (weight < 1/n keeps the problem in the regime where
/// the stability count below is the whole story).
class ParabolicBundle {
  public:
    ParabolicBundle(const LatticeTau& lat, BundleClass bundle,
                    std::vector<MarkedLine> marks, double weight = 0.25);

    const BundleClass& bundle() const { return bundle_; }
    const std::vector<MarkedLine>& marks() const { return marks_; }
    double weight() const { return weight_; }

  private:
    BundleClass bundle_;
    std::vector<MarkedLine> marks_;
    double weight_;
};

/// A line is bad when it lies inside a degree-0 subbundle: SplitGeneric ->
/// coord in {0, inf}; SplitTorsion -> every line; NonSplit -> coord = inf.
/// Decided exactly from the coordinate, never by proximity.
bool line_is_bad(const BundleClass& E, const MarkedLine& line);

/// Whether two bad lines lie in the same degree-0 subbundle: SplitGeneric ->
/// both inf or both 0; SplitTorsion -> exactly equal coordinates (the
/// constant directions of L_i + L_i); NonSplit -> both inf.
bool bad_same_direction(const BundleClass& E, const MarkedLine& a,
                        const MarkedLine& b);

enum class Stability { Stable, Semistable, Unstable };

struct StabilityResult {
    Stability verdict;
    int m;   ///< max number of marks bad in one common direction
};

/// Small-weight stability: m < n/2 stable, m = n/2 semistable, else
/// unstable, where n is the number of marks.
StabilityResult classify_stability(const ParabolicBundle& pb);

/// Canonical representative of the isomorphism class of a stable bundle.
/// SplitGeneric: if the last mark lies in the L^{-1}-direction (coord 0),
/// swap the presentation to SplitGeneric(-lam) inverting every coordinate
/// (z -> 1/z), then rescale so the first good coordinate is 1. NonSplit:
/// shift so the first good coordinate is 0. SplitTorsion: send the first
/// three coordinates to (0, 1, inf). Idempotent; throws NotStable on
/// non-stable input.
ParabolicBundle canonical_form(const LatticeTau& lat, const ParabolicBundle& pb);

}  // namespace parmod
