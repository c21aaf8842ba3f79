#include "parmod/projective.hpp"

#include <cmath>

namespace parmod {

double chordal(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_inf() && b.is_inf()) return 0.0;
    if (a.is_inf()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
    if (b.is_inf()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
    return 2.0 * std::abs(a.value() - b.value()) /
           std::sqrt((1.0 + std::norm(a.value())) * (1.0 + std::norm(b.value())));
}

bool chordal_eq(const ProjPoint& a, const ProjPoint& b, double tol) {
    return chordal(a, b) < tol;
}

double separation(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_inf() || b.is_inf()) return chordal(a, b);
    const double na = std::abs(a.value()), nb = std::abs(b.value());
    const double s = std::max({1e-6, na, nb});
    return 2.0 * std::abs(a.value() - b.value()) * s /
           std::sqrt((s * s + na * na) * (s * s + nb * nb));
}

MobiusMap::MobiusMap(const Eigen::Matrix2cd& m, double tol) : m_(m), tol_(tol) {
    double mx = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) mx = std::max(mx, std::abs(m_(i, j)));
    if (mx == 0.0) throw DegenerateSamples("MobiusMap: zero matrix");
    m_ /= mx;
    const cplx d = m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0);
    if (std::abs(d) <= tol_)
        throw DegenerateSamples("MobiusMap: |det| below tolerance after normalization");
}

ProjPoint MobiusMap::apply(const ProjPoint& x) const {
    cplx num, den;
    if (x.is_inf()) {
        num = m_(0, 0);
        den = m_(1, 0);
    } else {
        num = m_(0, 0) * x.value() + m_(0, 1);
        den = m_(1, 0) * x.value() + m_(1, 1);
    }
    if (std::abs(den) == 0.0) return ProjPoint::infinity();
    const cplx r = num / den;
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        return ProjPoint::infinity();
    return ProjPoint(r);
}

MobiusMap MobiusMap::inverse() const {
    Eigen::Matrix2cd adj;
    adj << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return MobiusMap(adj, tol_);
}

MobiusMap MobiusMap::identity() {
    return MobiusMap(Eigen::Matrix2cd::Identity());
}

namespace {

// Matrix of the Moebius map sending (z1, z2, z3) -> (0, 1, inf), with the
// standard degenerations when one of the three points is infinite.
Eigen::Matrix2cd three_to_std(const ProjPoint& z1, const ProjPoint& z2,
                              const ProjPoint& z3) {
    Eigen::Matrix2cd t;
    if (z1.is_inf()) {
        t << 0.0, z2.value() - z3.value(), 1.0, -z3.value();
    } else if (z2.is_inf()) {
        t << 1.0, -z1.value(), 1.0, -z3.value();
    } else if (z3.is_inf()) {
        t << 1.0, -z1.value(), 0.0, z2.value() - z1.value();
    } else {
        const cplx d23 = z2.value() - z3.value();
        const cplx d21 = z2.value() - z1.value();
        t << d23, -z1.value() * d23, d21, -z3.value() * d21;
    }
    return t;
}

void require_separated(const std::array<ProjPoint, 3>& pts, double tol,
                       const char* side) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (separation(pts[i], pts[j]) <= 10.0 * tol)
                throw DegenerateSamples(std::string("mobius_from_three: ") + side +
                                        " points insufficiently separated");
}

}  // namespace

MobiusMap mobius_from_three(const std::array<ProjPoint, 3>& inputs,
                            const std::array<ProjPoint, 3>& outputs, double tol) {
    require_separated(inputs, tol, "input");
    require_separated(outputs, tol, "output");
    const Eigen::Matrix2cd tin = three_to_std(inputs[0], inputs[1], inputs[2]);
    const Eigen::Matrix2cd tout = three_to_std(outputs[0], outputs[1], outputs[2]);
    Eigen::Matrix2cd adj;   // adjugate of tout, i.e. its inverse up to scale
    adj << tout(1, 1), -tout(0, 1), -tout(1, 0), tout(0, 0);
    return MobiusMap(adj * tin, tol);
}

ProjPoint cross_ratio(const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& c, const ProjPoint& d) {
    const Eigen::Matrix2cd t = three_to_std(c, b, d);
    cplx num, den;
    if (a.is_inf()) {
        num = t(0, 0);
        den = t(1, 0);
    } else {
        num = t(0, 0) * a.value() + t(0, 1);
        den = t(1, 0) * a.value() + t(1, 1);
    }
    if (std::abs(den) == 0.0) return ProjPoint::infinity();
    const cplx r = num / den;
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        return ProjPoint::infinity();
    return ProjPoint(r);
}

}  // namespace parmod
