#pragma once

#include <optional>
#include <string>
#include <vector>

#include "afinv/int_polynomial.hpp"
#include "afinv/numeric.hpp"

namespace afinv {

// Square matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
public:
    explicit IntMatrix(int dim);
    static IntMatrix identity(int dim);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int dim() const { return dim_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& c, const IntMatrix& a);
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix pow(int e) const; // e >= 0
    IntMatrix transpose() const;
    Int trace() const;
    Int det() const;
    bool is_unimodular() const { return abs(det()) == 1; }
    // Exact inverse for |det| = 1 matrices (integer output).
    IntMatrix inverse_unimodular() const;

    bool entrywise_positive() const;
    bool entrywise_nonnegative() const;

    std::vector<std::vector<Int>> rows() const;
    std::string str() const;

private:
    int dim_;
    std::vector<Int> e_;
};

// det(xI - M), monic, via Faddeev-LeVerrier (exact integer divisions).
IntPolynomial char_poly(const IntMatrix& m);

// Smallest s <= max_exp with M^s entrywise positive, if any.
std::optional<int> eventually_positive_power(const IntMatrix& m, int max_exp);

// Fraction-free determinant of a general integer matrix (Bareiss).
Int bareiss_det(std::vector<std::vector<Int>> a);

} // namespace afinv
