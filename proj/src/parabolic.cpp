#include "parmod/parabolic.hpp"

#include <algorithm>

namespace parmod {

// ---- bundle classes -------------------------------------------------------

BundleClass BundleClass::split_generic(const LatticeTau& lat, TorusPoint lam) {
    const TorusPoint red = reduce_mod_lattice(lat, lam.z);
    for (const TorusPoint& t : two_torsion_points(lat))
        if (torus_eq(lat, red, t))
            throw Error(
                "BundleClass::split_generic: lam is 2-torsion; use "
                "split_torsion or nonsplit for those fibers");
    return BundleClass(BundleKind::SplitGeneric, red, 0);
}

BundleClass BundleClass::split_torsion(const LatticeTau& lat, int i) {
    if (i < 1 || i > 4) throw Error("BundleClass: torsion index must be 1..4");
    return BundleClass(BundleKind::SplitTorsion, two_torsion_points(lat)[i - 1],
                       i);
}

BundleClass BundleClass::nonsplit(const LatticeTau& lat, int i) {
    if (i < 1 || i > 4) throw Error("BundleClass: torsion index must be 1..4");
    return BundleClass(BundleKind::NonSplit, two_torsion_points(lat)[i - 1], i);
}

int BundleClass::torsion_index() const {
    if (kind_ == BundleKind::SplitGeneric)
        throw Error("BundleClass: SplitGeneric has no torsion index");
    return index_;
}

// ---- parabolic bundles ----------------------------------------------------

ParabolicBundle::ParabolicBundle(const LatticeTau& lat, BundleClass bundle,
                                 std::vector<MarkedLine> marks, double weight)
    : bundle_(bundle), marks_(std::move(marks)), weight_(weight) {
    const std::size_t n = marks_.size();
    if (n == 0) throw Error("ParabolicBundle: at least one mark required");
    if (!(weight_ > 0.0 && weight_ < 1.0 / double(n)))
        throw Error("ParabolicBundle: weight must lie in (0, 1/n)");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (torus_eq(lat, marks_[i].at, marks_[j].at))
                throw Error("ParabolicBundle: marked points must be distinct");
}

// ---- badness and stability ------------------------------------------------

bool line_is_bad(const BundleClass& E, const MarkedLine& line) {
    switch (E.kind()) {
        case BundleKind::SplitGeneric:
            return line.coord.is_inf() || line.coord == ProjPoint(cplx(0.0));
        case BundleKind::SplitTorsion:
            return true;
        case BundleKind::NonSplit:
            return line.coord.is_inf();
    }
    return false;  // unreachable
}

bool bad_same_direction(const BundleClass& E, const MarkedLine& a,
                        const MarkedLine& b) {
    if (!line_is_bad(E, a) || !line_is_bad(E, b)) return false;
    switch (E.kind()) {
        case BundleKind::SplitGeneric:
        case BundleKind::SplitTorsion:
            return a.coord == b.coord;
        case BundleKind::NonSplit:
            return true;  // both bad means both inf
    }
    return false;  // unreachable
}

StabilityResult classify_stability(const ParabolicBundle& pb) {
    const auto& marks = pb.marks();
    const int n = int(marks.size());
    int m = 0;
    switch (pb.bundle().kind()) {
        case BundleKind::SplitGeneric: {
            int hi = 0, lo = 0;
            for (const auto& mk : marks) {
                if (mk.coord.is_inf()) ++hi;
                else if (mk.coord == ProjPoint(cplx(0.0))) ++lo;
            }
            m = std::max(hi, lo);
            break;
        }
        case BundleKind::NonSplit: {
            for (const auto& mk : marks)
                if (mk.coord.is_inf()) ++m;
            break;
        }
        case BundleKind::SplitTorsion: {
            // Every constant direction is a maximal subbundle, so the count
            // is the largest multiplicity among exactly-equal coordinates.
            for (int i = 0; i < n; ++i) {
                int mult = 0;
                for (int j = 0; j < n; ++j)
                    if (marks[j].coord == marks[i].coord) ++mult;
                m = std::max(m, mult);
            }
            break;
        }
    }
    Stability verdict = Stability::Unstable;
    if (2 * m < n) verdict = Stability::Stable;
    else if (2 * m == n) verdict = Stability::Semistable;
    return {verdict, m};
}

// ---- canonical form -------------------------------------------------------

namespace {

ProjPoint proj_inverse(const ProjPoint& z) {
    if (z.is_inf()) return ProjPoint(cplx(0.0));
    if (z.value() == cplx(0.0)) return ProjPoint::infinity();
    return ProjPoint(1.0 / z.value());
}

bool is_good_coord(const BundleClass& E, const ProjPoint& z) {
    return !line_is_bad(E, MarkedLine{TorusPoint{cplx(0.0)}, z});
}

}  // namespace

ParabolicBundle canonical_form(const LatticeTau& lat,
                               const ParabolicBundle& pb) {
    if (classify_stability(pb).verdict != Stability::Stable)
        throw NotStable("canonical_form requires a stable bundle");

    BundleClass E = pb.bundle();
    std::vector<MarkedLine> marks = pb.marks();

    if (E.kind() == BundleKind::SplitGeneric &&
        marks.back().coord == ProjPoint(cplx(0.0))) {
        // Swap the ordered presentation L + L^{-1} -> L^{-1} + L, which
        // negates lam and inverts every fiber coordinate.
        E = BundleClass::split_generic(lat, torus_neg(lat, E.lam()));
        for (auto& mk : marks) mk.coord = proj_inverse(mk.coord);
    }

    switch (E.kind()) {
        case BundleKind::SplitGeneric: {
            // Diagonal automorphisms scale every coordinate by a common
            // factor; pin the first good one to exactly 1 (assigning it
            // directly keeps canonical_form bitwise idempotent).
            for (auto& mk : marks)
                if (is_good_coord(E, mk.coord)) {
                    const cplx s = mk.coord.value();
                    for (auto& other : marks)
                        if (!other.coord.is_inf() && &other != &mk)
                            other.coord = ProjPoint(other.coord.value() / s);
                    mk.coord = ProjPoint(cplx(1.0));
                    break;
                }
            break;
        }
        case BundleKind::NonSplit: {
            // Unipotent automorphisms shift every finite coordinate; pin
            // the first good one to exactly 0.
            for (auto& mk : marks)
                if (is_good_coord(E, mk.coord)) {
                    const cplx b = mk.coord.value();
                    for (auto& other : marks)
                        if (!other.coord.is_inf() && &other != &mk)
                            other.coord = ProjPoint(other.coord.value() - b);
                    mk.coord = ProjPoint(cplx(0.0));
                    break;
                }
            break;
        }
        case BundleKind::SplitTorsion: {
            // Full Moebius gauge freedom: normalize the first three
            // coordinates (stability makes them pairwise distinct). The
            // defining points land on (0, 1, inf) exactly; any further
            // marks go through the fitted map.
            if (marks.size() < 3)
                throw Error("canonical_form: SplitTorsion needs three marks");
            const MobiusMap g = mobius_from_three(
                {marks[0].coord, marks[1].coord, marks[2].coord},
                {ProjPoint(cplx(0.0)), ProjPoint(cplx(1.0)),
                 ProjPoint::infinity()},
                lat.tol);
            for (std::size_t k = 3; k < marks.size(); ++k)
                marks[k].coord = g.apply(marks[k].coord);
            marks[0].coord = ProjPoint(cplx(0.0));
            marks[1].coord = ProjPoint(cplx(1.0));
            marks[2].coord = ProjPoint::infinity();
            break;
        }
    }
    return ParabolicBundle(lat, E, std::move(marks), pb.weight());
}

}  // namespace parmod
