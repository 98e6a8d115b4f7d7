#pragma once

#include <vector>

#include "afinv/int_matrix.hpp"
#include "afinv/int_polynomial.hpp"

namespace afinv {

// Invariant factors of xI - M over Q[x] (the polynomials whose companion
// blocks form the Frobenius normal form), nonconstant only, in divisibility
// order.  Computed from determinantal divisors: d_k = gcd of all k x k
// minors, f_k = d_k / d_{k-1}.  Monic integer polynomials.
std::vector<IntPolynomial> invariant_factors(const IntMatrix& m);

// Identical Frobenius forms over Q.
bool similar_over_rationals(const IntMatrix& a, const IntMatrix& b);

} // namespace afinv
