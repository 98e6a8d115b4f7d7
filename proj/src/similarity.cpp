#include "afinv/similarity.hpp"

#include <stdexcept>

namespace afinv {

namespace {

// Determinant of a k x k matrix of integer polynomials by cofactor
// expansion; fine at the dimensions this library works with.
IntPolynomial poly_det(const std::vector<std::vector<IntPolynomial>>& a) {
    const size_t k = a.size();
    if (k == 1) return a[0][0];
    IntPolynomial acc;
    for (size_t j = 0; j < k; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<IntPolynomial>> minor(k - 1);
        for (size_t r = 1; r < k; ++r) {
            minor[r - 1].reserve(k - 1);
            for (size_t c = 0; c < k; ++c)
                if (c != j) minor[r - 1].push_back(a[r][c]);
        }
        IntPolynomial term = a[0][j] * poly_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

// gcd of all k x k minors of xI - M, canonical (primitive, positive lead).
IntPolynomial determinantal_divisor(const IntMatrix& m, int k) {
    const int n = m.dim();
    std::vector<std::vector<IntPolynomial>> xim(n, std::vector<IntPolynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                xim[i][j] = IntPolynomial{-m.at(i, j), Int(1)};
            else
                xim[i][j] = IntPolynomial::constant(-m.at(i, j));
        }
    std::vector<std::vector<int>> row_sets, col_sets;
    subsets(n, k, row_sets);
    subsets(n, k, col_sets);
    IntPolynomial g;
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            std::vector<std::vector<IntPolynomial>> sub(k, std::vector<IntPolynomial>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = xim[rs[i]][cs[j]];
            IntPolynomial d = poly_det(sub);
            if (d.is_zero()) continue;
            g = g.is_zero() ? d.primitive_part() : poly_gcd(g, d);
            if (g.degree() == 0) return g;
        }
    }
    if (g.is_zero()) throw std::logic_error("xI - M has a vanishing determinantal divisor");
    return g;
}

} // namespace

std::vector<IntPolynomial> invariant_factors(const IntMatrix& m) {
    const int n = m.dim();
    std::vector<IntPolynomial> out;
    IntPolynomial prev = IntPolynomial::constant(1);
    for (int k = 1; k <= n; ++k) {
        IntPolynomial dk = determinantal_divisor(m, k);
        IntPolynomial fk = dk.divide_exact(prev).primitive_part();
        if (fk.degree() > 0) out.push_back(fk);
        prev = dk;
    }
    return out;
}

bool similar_over_rationals(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    return invariant_factors(a) == invariant_factors(b);
}

} // namespace afinv
