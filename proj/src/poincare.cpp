#include "parmod/poincare.hpp"

#include <sstream>
#include <utility>

namespace parmod {

IntPoly::IntPoly(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const bigint& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(int degree, const bigint& coef) {
    if (degree < 0) throw Error("IntPoly::monomial: negative degree");
    std::vector<bigint> v(std::size_t(degree) + 1);
    v.back() = coef;
    return IntPoly(std::move(v));
}

const bigint& IntPoly::coeff(int k) const {
    static const bigint zero = 0;
    if (k < 0 || k >= int(c_.size())) return zero;
    return c_[std::size_t(k)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<bigint> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(int(i)) + o.coeff(int(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<bigint> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(int(i)) - o.coeff(int(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<bigint> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw Error("IntPoly::pow: negative exponent");
    IntPoly acc = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bigint IntPoly::evaluate(const bigint& x) const {
    bigint acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const bigint& c = coeff(k);
        if (c == 0) continue;
        const bigint mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw Error("exact_div: division by the zero polynomial");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree())
        throw InexactDivision("exact_div: numerator degree below denominator");
    // Ascending long division: the denominators of interest have unit
    // constant term, but we keep the general integer-divisibility check.
    int low = 0;
    while (den.coeff(low) == 0) ++low;   // den != 0, so this terminates
    const int qdeg = num.degree() - den.degree();
    std::vector<bigint> q(std::size_t(qdeg) + 1);
    std::vector<bigint> rem(num.coeffs());
    rem.resize(std::size_t(num.degree()) + 1);
    for (int k = 0; k <= qdeg; ++k) {
        const bigint& head = rem[std::size_t(k + low)];
        if (head % den.coeff(low) != 0)
            throw InexactDivision("exact_div: nonzero remainder");
        q[std::size_t(k)] = head / den.coeff(low);
        if (q[std::size_t(k)] == 0) continue;
        for (int j = low; j <= den.degree(); ++j) {
            const std::size_t idx = std::size_t(k + j);
            if (idx < rem.size()) rem[idx] -= q[std::size_t(k)] * den.coeff(j);
        }
    }
    const IntPoly quotient{std::move(q)};
    if (quotient * den != num) throw InexactDivision("exact_div: nonzero remainder");
    return quotient;
}

IntPoly poincare_formula(int g, int n) {
    if (g < 0) throw Error("poincare_formula: genus must be nonnegative");
    if (n < 1) throw Error("poincare_formula: n must be a positive integer");
    if (n % 2 == 0)
        throw InexactDivision(
            "poincare_formula: the closed formula requires odd n");
    const IntPoly one = IntPoly::constant(1);
    const IntPoly t = IntPoly::monomial(1);
    const IntPoly t2 = IntPoly::monomial(2);
    const IntPoly t3 = IntPoly::monomial(3);
    const IntPoly t4 = IntPoly::monomial(4);
    const bigint two_pow = bigint(1) << (n - 1);
    const IntPoly numerator =
        (one + t2).pow(n) * (one + t3).pow(2 * g) -
        IntPoly::constant(two_pow) * IntPoly::monomial(2 * g + n - 1) *
            (one + t).pow(2 * g) * (one + t2);
    const IntPoly denominator = (one - t2) * (one - t4);
    return exact_div(numerator, denominator);
}

IntPoly decomposition_poincare() {
    const IntPoly one = IntPoly::constant(1);
    const IntPoly t = IntPoly::monomial(1);
    const IntPoly t2 = IntPoly::monomial(2);
    // (1 + t)^2 is the compactly-supported Poincare polynomial of the
    // Jacobian parametrizing the bad locus' base curve.
    const IntPoly jac = one + IntPoly::constant(2) * t + t2;
    const IntPoly good = (one + t2).pow(3) - jac;
    const IntPoly bad = jac * (one + t2);
    return good + bad;
}

}  // namespace parmod
