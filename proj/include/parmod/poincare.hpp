#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parmod/errors.hpp"

namespace parmod {

using bigint = boost::multiprecision::cpp_int;

/// Dense integer-coefficient polynomial in t with exact (arbitrary
/// precision) arithmetic; coefficient index = degree. Immutable value
/// semantics, no trailing zero coefficients stored.
class IntPoly {
  public:
    IntPoly() = default;   ///< the zero polynomial
    explicit IntPoly(std::vector<bigint> coeffs);

    static IntPoly constant(const bigint& c);
    static IntPoly monomial(int degree, const bigint& coef = 1);

    bool is_zero() const { return c_.empty(); }
    /// Degree, with degree(0) = -1 by convention.
    int degree() const { return int(c_.size()) - 1; }
    /// Coefficient of t^k (0 beyond the degree).
    const bigint& coeff(int k) const;
    const std::vector<bigint>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(int e) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    bigint evaluate(const bigint& x) const;

    /// Human-readable form like "1 + 4*t^2 + 2*t^3 + 4*t^4 + t^6".
    std::string str() const;

  private:
    std::vector<bigint> c_;
    void trim();
};

/// Exact polynomial quotient num / den; throws InexactDivision when den
/// does not divide num in Z[t].
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

/// The closed formula for the Poincare polynomial of the moduli space of
/// stable parabolic bundles with n marked points on a genus-g curve (small
/// weights, n odd):
///
///   [ (1+t^2)^n (1+t^3)^{2g} - 2^{n-1} t^{2g+n-1} (1+t)^{2g} (1+t^2) ]
///     / [ (1-t^2)(1-t^4) ],
///
/// an exact division. Throws InexactDivision for even n (the formula
/// applies to odd n only) and Error for g < 0 or n < 1.
IntPoly poincare_formula(int g, int n);

/// The same polynomial for (g, n) = (1, 3) assembled from the
/// decomposition of the moduli space: the compactly-supported Poincare
/// polynomial of the good locus, (1+t^2)^3 - (1+2t+t^2), plus that of the
/// bad locus, (1+2t+t^2)(1+t^2).
IntPoly decomposition_poincare();

}  // namespace parmod
