#include "afinv/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace afinv {

IntMatrix::IntMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, Int(0)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must form a square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    IntMatrix out(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    IntMatrix out(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    const int n = a.dim_;
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

IntMatrix operator*(const Int& c, const IntMatrix& a) {
    IntMatrix out(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = c * a.e_[k];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(dim_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

IntMatrix IntMatrix::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative matrix power");
    IntMatrix acc = identity(dim_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int IntMatrix::det() const { return bareiss_det(rows()); }

IntMatrix IntMatrix::inverse_unimodular() const {
    Int d = det();
    if (abs(d) != 1) throw std::invalid_argument("matrix is not unimodular");
    const int n = dim_;
    IntMatrix adj(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // Cofactor of (j, i): delete row j and column i.
            std::vector<std::vector<Int>> minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Int> row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    row.push_back(at(r, c));
                }
                minor.push_back(std::move(row));
            }
            Int cof = bareiss_det(std::move(minor));
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(i, j) = cof;
        }
    }
    return d * adj; // d = ±1, so adj / d == d * adj
}

bool IntMatrix::entrywise_positive() const {
    for (const Int& x : e_)
        if (x <= 0) return false;
    return true;
}

bool IntMatrix::entrywise_nonnegative() const {
    for (const Int& x : e_)
        if (x < 0) return false;
    return true;
}

std::vector<std::vector<Int>> IntMatrix::rows() const {
    std::vector<std::vector<Int>> out(dim_, std::vector<Int>(dim_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[i][j] = at(i, j);
    return out;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < dim_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

IntPolynomial char_poly(const IntMatrix& m) {
    const int n = m.dim();
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    IntMatrix nk = m;
    for (int k = 1; k <= n; ++k) {
        Int ck = -nk.trace();
        if (k > 1) {
            Int q;
            mpz_divexact_ui(q.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
            ck = q;
        }
        coeffs[n - k] = ck;
        if (k < n) {
            IntMatrix shifted = nk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            nk = m * shifted;
        }
    }
    return IntPolynomial(std::move(coeffs));
}

std::optional<int> eventually_positive_power(const IntMatrix& m, int max_exp) {
    if (max_exp < 1) throw std::invalid_argument("max_exp must be >= 1");
    IntMatrix p = m;
    for (int s = 1; s <= max_exp; ++s) {
        if (p.entrywise_positive()) return s;
        if (s < max_exp) p = p * m;
    }
    return std::nullopt;
}

} // namespace afinv
