#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "afinv/numeric.hpp"

namespace afinv {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored lowest degree first.  The zero polynomial has an empty
// coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> coeffs_lowest_first);
    explicit IntPolynomial(std::vector<Int> coeffs_lowest_first);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const Int& c);
    // x^k
    static IntPolynomial monomial(int k, const Int& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;
    Int coeff(int k) const; // 0 for k out of range
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Int eval(const Int& x) const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;

    IntPolynomial derivative() const;
    // x^deg * p(1/x); requires p(0) != 0 so the degree is preserved.
    IntPolynomial reversed() const;

    Int content() const;           // gcd of coefficients (0 for zero poly)
    IntPolynomial primitive_part() const; // content and leading sign removed

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    friend IntPolynomial operator*(const Int& c, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    // Exact division; throws std::domain_error if the division has a remainder.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (the canonical representative).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree(const IntPolynomial& p);

// Square-free part: p with all multiplicities flattened to 1 (primitive,
// positive leading coefficient).
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition: p = c * prod f_i^i with each f_i square-free, pairwise
// coprime, primitive, positive leading coefficient.  Returns (f_i, i) pairs
// with nonconstant f_i only.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Determinant of the Sylvester matrix of p and q, computed fraction-free
// (Bareiss).  Both inputs must be nonzero.
Int resultant(const IntPolynomial& p, const IntPolynomial& q);

// (-1)^{n(n-1)/2} * resultant(p, p') / lc(p) for deg(p) = n >= 2.
Int discriminant(const IntPolynomial& p);

} // namespace afinv
