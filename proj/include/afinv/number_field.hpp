#pragma once

#include <memory>
#include <string>
#include <vector>

#include "afinv/int_polynomial.hpp"
#include "afinv/numeric.hpp"
#include "afinv/real_algebraic.hpp"

namespace afinv {

// Q[x]/(p) for a monic irreducible integer polynomial p, together with a
// designated real root of p fixing the real embedding.  Immutable; shared by
// the elements it spawns.
class NumberField {
public:
    static std::shared_ptr<const NumberField> create(IntPolynomial minpoly,
                                                     RealAlgebraicNumber designated_root);

    int degree() const { return minpoly_.degree(); }
    const IntPolynomial& minpoly() const { return minpoly_; }
    const RealAlgebraicNumber& designated_root() const { return root_; }

private:
    NumberField(IntPolynomial p, RealAlgebraicNumber r)
        : minpoly_(std::move(p)), root_(std::move(r)) {}
    IntPolynomial minpoly_;
    RealAlgebraicNumber root_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Residue-class representative with rational coordinates in the power basis
// 1, t, ..., t^{n-1}.  Two elements are equal iff their coordinate vectors
// are equal.  All arithmetic is exact.
class NumberFieldElement {
public:
    NumberFieldElement() = default;
    static NumberFieldElement from_coords(NumberFieldPtr field, std::vector<Rational> coords);
    static NumberFieldElement from_rational(NumberFieldPtr field, const Rational& value);
    static NumberFieldElement generator(NumberFieldPtr field);
    static NumberFieldElement zero(NumberFieldPtr field);
    static NumberFieldElement one(NumberFieldPtr field);

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const; // lies in Q
    Rational rational_value() const;

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b);
    NumberFieldElement operator-() const;
    friend NumberFieldElement operator*(const Rational& c, const NumberFieldElement& a);
    friend NumberFieldElement operator+(const NumberFieldElement& a, const Rational& c);
    friend NumberFieldElement operator-(const NumberFieldElement& a, const Rational& c);
    bool operator==(const NumberFieldElement& other) const;

    NumberFieldElement inverse() const;
    NumberFieldElement pow(int e) const; // e >= 0

    // Exact sign of the real-embedding value.
    int sign() const;
    int compare(const NumberFieldElement& other) const { return (*this - other).sign(); }
    int compare(const Rational& r) const { return (*this - r).sign(); }
    NumberFieldElement abs() const { return sign() >= 0 ? *this : -(*this); }

    // Certified enclosure of the real-embedding value, no wider than
    // max_width.
    RationalInterval enclosure(const Rational& max_width) const;

    double to_double() const;
    std::string str(const std::string& var = "t") const;

private:
    NumberFieldPtr field_;
    std::vector<Rational> coords_;
};

// Greatest integer <= the real-embedding value of x.  Exact-integer inputs
// are detected symbolically before any interval refinement.
Int field_floor(const NumberFieldElement& x);
Int field_ceil(const NumberFieldElement& x);

// Monic minimal polynomial of x over Q, returned with integer coefficients
// cleared to a primitive representative (monic whenever x is an algebraic
// integer).
IntPolynomial minimal_polynomial(const NumberFieldElement& x);

// The element as a stand-alone real algebraic number (minimal polynomial +
// isolating interval).
RealAlgebraicNumber to_algebraic(const NumberFieldElement& x);

} // namespace afinv
