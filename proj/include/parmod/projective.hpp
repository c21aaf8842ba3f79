#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "parmod/errors.hpp"
#include "parmod/lattice.hpp"

namespace parmod {

/// A point of CP^1: either a finite complex number or the distinguished
/// point at infinity. Infinity is an exact, explicitly represented state so
/// downstream stratifications (bad lines, branch points) are deterministic.
class ProjPoint {
  public:
    ProjPoint() : inf_(false), v_(0.0, 0.0) {}
    ProjPoint(cplx v) : inf_(false), v_(v) {}                 // NOLINT: implicit by design
    ProjPoint(double v) : inf_(false), v_(v, 0.0) {}          // NOLINT
    static ProjPoint infinity() { ProjPoint p; p.inf_ = true; return p; }

    bool is_inf() const { return inf_; }
    cplx value() const { return v_; }   ///< meaningful only when finite

    /// Exact comparison (used for stratification decisions, never numerics).
    bool operator==(const ProjPoint& o) const {
        if (inf_ || o.inf_) return inf_ && o.inf_;
        return v_ == o.v_;
    }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  private:
    bool inf_;
    cplx v_;
};

/// Riemann-sphere (chordal) distance; range [0, 2].
double chordal(const ProjPoint& a, const ProjPoint& b);
bool chordal_eq(const ProjPoint& a, const ProjPoint& b, double tol);

/// Chordal distance after rescaling the pair by s = max(1e-6, |a|, |b|):
/// a scale-adaptive separation measure used to accept samples for the
/// three-point fit. The fitted coordinate carries a configuration-dependent
/// gauge scale, so plain chordal separation would reject affinely
/// well-conditioned triples whose common magnitude happens to be large or
/// small. Falls back to plain chordal when either point is infinite.
double separation(const ProjPoint& a, const ProjPoint& b);

/// A Moebius transformation z -> (az + b)/(cz + d), stored as a 2x2 complex
/// matrix normalized so its largest entry has modulus 1.
class MobiusMap {
  public:
    explicit MobiusMap(const Eigen::Matrix2cd& m, double tol = 1e-9);

    ProjPoint apply(const ProjPoint& x) const;
    MobiusMap inverse() const;
    const Eigen::Matrix2cd& matrix() const { return m_; }
    cplx det() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }

    static MobiusMap identity();

  private:
    Eigen::Matrix2cd m_;
    double tol_;
};

/// The unique Moebius map sending inputs[k] -> outputs[k], k = 0,1,2.
/// Inputs must be pairwise distinct and outputs pairwise distinct
/// (separation > 10*tol); throws DegenerateSamples otherwise.
MobiusMap mobius_from_three(const std::array<ProjPoint, 3>& inputs,
                            const std::array<ProjPoint, 3>& outputs,
                            double tol = 1e-9);

/// Cross-ratio (a, b; c, d) = the image of a under the map sending
/// (c, b, d) -> (0, 1, inf).
ProjPoint cross_ratio(const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& c, const ProjPoint& d);

}  // namespace parmod
