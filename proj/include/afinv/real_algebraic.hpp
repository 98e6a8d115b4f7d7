#pragma once

#include <vector>

#include "afinv/int_polynomial.hpp"
#include "afinv/numeric.hpp"
#include "afinv/rat_polynomial.hpp"

namespace afinv {

// A real root of an integer polynomial, represented by a defining polynomial
// together with a rational isolating interval.  The defining polynomial is
// primitive with positive leading coefficient and square-free; for inputs of
// degree <= 4 (every path that feeds number fields) it is irreducible.  The
// interval contains exactly one real root of the defining polynomial and its
// endpoints are not roots.  Values are immutable; refinement returns copies.
class RealAlgebraicNumber {
public:
    // Empty placeholder; any use other than assignment is invalid.
    RealAlgebraicNumber() = default;

    // Validates the isolating-interval invariant; throws std::invalid_argument.
    static RealAlgebraicNumber make_root(IntPolynomial minpoly, RationalInterval interval);
    static RealAlgebraicNumber from_rational(const Rational& value);

    const IntPolynomial& minpoly() const { return minpoly_; }
    const RationalInterval& interval() const { return interval_; }

    bool is_rational() const { return minpoly_.degree() == 1; }
    Rational rational_value() const;

    RealAlgebraicNumber refined(const Rational& max_width) const;

    int sign() const;
    // -1 / 0 / +1 for this value vs other.
    int compare(const RealAlgebraicNumber& other) const;
    int compare(const Rational& other) const;
    bool operator==(const RealAlgebraicNumber& other) const { return compare(other) == 0; }
    bool operator<(const RealAlgebraicNumber& other) const { return compare(other) < 0; }

    double to_double() const;

private:
    void refine_step();

    IntPolynomial minpoly_;
    RationalInterval interval_;
    // cached endpoint sign of minpoly at interval_.lo (for bisection)
    int lo_sign_ = 0;
};

// Distinct real roots of p, sorted ascending, with pairwise disjoint
// isolating intervals.  p must be nonzero.
std::vector<RealAlgebraicNumber> real_roots(const IntPolynomial& p);

// Number of distinct real roots of p.
int count_real_roots(const IntPolynomial& p);

// Exact sign of f(alpha).
int sign_of_poly_at(const IntPolynomial& f, const RealAlgebraicNumber& alpha);

// Interval evaluation of f over x by Horner's scheme.
RationalInterval interval_eval(const IntPolynomial& f, const RationalInterval& x);

// Irreducible factors over Z of a monic integer polynomial of degree <= 4
// (monic factors, each appearing once per multiplicity).
std::vector<IntPolynomial> factor_monic_up_to_quartic(const IntPolynomial& p);

// True iff p (monic, 1 <= deg <= 4) has no nontrivial factorization over Z.
bool is_irreducible_up_to_quartic(const IntPolynomial& p);

} // namespace afinv
