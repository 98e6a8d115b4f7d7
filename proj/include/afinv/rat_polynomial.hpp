#pragma once

#include <utility>
#include <vector>

#include "afinv/numeric.hpp"

namespace afinv {

class IntPolynomial;

// Polynomial over Q, lowest degree first.  Workhorse for division, gcd and
// Sturm chains; not part of the public domain model.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs_lowest_first);
    explicit RatPolynomial(const IntPolynomial& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;
    // Sign of the leading behaviour as x -> +inf / -inf.
    int sign_at_plus_infinity() const;
    int sign_at_minus_infinity() const;

    RatPolynomial derivative() const;
    RatPolynomial monic() const;

    friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    RatPolynomial operator-() const;
    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) = default;

    std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& divisor) const;

    // Clears denominators and removes content; positive leading coefficient.
    IntPolynomial primitive_int_part() const;
    // Requires all coefficients integral.
    IntPolynomial to_int_polynomial() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

RatPolynomial rat_gcd(const RatPolynomial& a, const RatPolynomial& b);

// Sturm chain of p (negated-remainder sequence ending at a constant for
// square-free p).
std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p);

// Number of distinct real roots of p in the open interval (a, b); the
// endpoints must not be roots.
int sturm_count(const std::vector<RatPolynomial>& chain, const Rational& a, const Rational& b);

// Distinct real roots on the whole line.
int sturm_count_all(const std::vector<RatPolynomial>& chain);

// Strict upper bound on the absolute value of every complex root (Cauchy).
Int root_bound(const IntPolynomial& p);

} // namespace afinv
