#include "afinv/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "afinv/rat_polynomial.hpp"

namespace afinv {

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs_lowest_first)
    : coeffs_(coeffs_lowest_first) {
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs_lowest_first)
    : coeffs_(std::move(coeffs_lowest_first)) {
    normalize();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPolynomial IntPolynomial::monomial(int k, const Int& c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Int(0));
        p.coeffs_[k] = c;
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    return sgn(eval(x));
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Int(static_cast<long>(i)) * coeffs_[i]);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
    if (is_zero()) return *this;
    if (coeffs_.front() == 0) throw std::domain_error("reverse of polynomial with p(0) = 0");
    std::vector<Int> r(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(r));
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Int& c, const IntPolynomial& p) {
    std::vector<Int> out(p.coeffs_.size());
    for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [q, r] = RatPolynomial(*this).divmod(RatPolynomial(divisor));
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    IntPolynomial out = q.to_int_polynomial();
    return out;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    RatPolynomial g = rat_gcd(RatPolynomial(a), RatPolynomial(b));
    if (g.is_zero()) return IntPolynomial();
    return g.primitive_int_part();
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return p.divide_exact(g).primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial f = p.primitive_part();
    if (f.degree() == 0) return out;
    // Yun's algorithm.
    IntPolynomial fp = f.derivative();
    IntPolynomial a = poly_gcd(f, fp);
    IntPolynomial b = f.divide_exact(a);
    IntPolynomial c = fp.divide_exact(a) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPolynomial d = poly_gcd(b, c);
        if (d.degree() > 0) out.emplace_back(d, i);
        b = b.divide_exact(d);
        c = c.divide_exact(d) - b.derivative();
        ++i;
    }
    return out;
}

Int resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), p.leading().get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), q.leading().get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    const int size = m + n;
    // Sylvester matrix: n rows of p's coefficients, m rows of q's, highest first.
    std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = p.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = q.coeff(n - k);

    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (s[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < size; ++i)
                if (s[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(s[k], s[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                Int t = s[k][k] * s[i][j] - s[i][k] * s[k][j];
                mpz_divexact(s[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            s[i][k] = 0;
        }
        prev = s[k][k];
    }
    return sign * s[size - 1][size - 1];
}

Int discriminant(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 2) throw std::domain_error("discriminant requires degree >= 2");
    Int r = resultant(p, p.derivative());
    Int d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

} // namespace afinv
