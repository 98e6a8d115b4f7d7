#pragma once

#include "afinv/int_matrix.hpp"
#include "afinv/int_polynomial.hpp"

namespace afinv {

// Multiplicity-counted location of a polynomial's complex roots relative to
// the unit circle.
struct CirclePartition {
    int inside = 0;
    int on = 0;
    int outside = 0;

    int total() const { return inside + on + outside; }
    bool operator==(const CirclePartition&) const = default;
};

// Exact counts of roots with |z| < 1, |z| = 1, |z| > 1.  Requires p nonzero
// with p(0) != 0.  Works on the square-free decomposition and routes each
// square-free factor through the Moebius map x = (1+w)/(1-w), which carries
// the unit circle to the imaginary axis; circle roots and symmetric (w, -w)
// pairs are split off via gcd(Q(w), Q(-w)) and the rest is located by an
// exact argument-variation count along the imaginary axis.
CirclePartition unit_circle_partition(const IntPolynomial& p);

// No eigenvalues on the unit circle.  Rejects non-unimodular input.
bool is_hyperbolic(const IntMatrix& m);

// Hyperbolic with a unique eigenvalue inside or outside the unit circle.
bool is_tight(const IntMatrix& m);

} // namespace afinv
