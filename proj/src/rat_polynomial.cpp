#include "afinv/rat_polynomial.hpp"

#include <stdexcept>

#include "afinv/int_polynomial.hpp"

namespace afinv {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs_lowest_first)
    : coeffs_(std::move(coeffs_lowest_first)) {
    normalize();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) coeffs_.emplace_back(c);
    normalize();
}

void RatPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational RatPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int RatPolynomial::sign_at(const Rational& x) const { return sgn(eval(x)); }

int RatPolynomial::sign_at_plus_infinity() const {
    if (is_zero()) return 0;
    return sgn(leading());
}

int RatPolynomial::sign_at_minus_infinity() const {
    if (is_zero()) return 0;
    int s = sgn(leading());
    return (degree() % 2 == 0) ? s : -s;
}

RatPolynomial RatPolynomial::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
    return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / leading();
    return RatPolynomial(std::move(out));
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return RatPolynomial(std::move(out));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return RatPolynomial(std::move(out));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RatPolynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return RatPolynomial(std::move(out));
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divmod(const RatPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd < dd) return {RatPolynomial(), *this};
    std::vector<Rational> quot(rd - dd + 1, Rational(0));
    for (int k = rd; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rational factor = rem[k] / divisor.leading();
        quot[k - dd] = factor;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * divisor.coeffs_[j];
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

IntPolynomial RatPolynomial::primitive_int_part() const {
    if (is_zero()) return IntPolynomial();
    Int den_lcm = 1;
    for (const Rational& c : coeffs_) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Int> ints(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Rational scaled = coeffs_[i] * Rational(den_lcm);
        ints[i] = scaled.get_num();
    }
    return IntPolynomial(std::move(ints)).primitive_part();
}

IntPolynomial RatPolynomial::to_int_polynomial() const {
    std::vector<Int> ints(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!is_integer(coeffs_[i])) throw std::domain_error("polynomial has non-integer coefficient");
        ints[i] = coeffs_[i].get_num();
    }
    return IntPolynomial(std::move(ints));
}

RatPolynomial rat_gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial f = a, g = b;
    while (!g.is_zero()) {
        RatPolynomial r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f.monic();
}

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
    std::vector<RatPolynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    RatPolynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const RatPolynomial& s0 = chain[chain.size() - 2];
        const RatPolynomial& s1 = chain[chain.size() - 1];
        RatPolynomial r = s0.divmod(s1).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sturm_count(const std::vector<RatPolynomial>& chain, const Rational& a, const Rational& b) {
    if (chain.empty()) throw std::domain_error("sturm count on zero polynomial");
    if (!(a < b)) throw std::domain_error("sturm count needs a < b");
    if (chain[0].sign_at(a) == 0 || chain[0].sign_at(b) == 0)
        throw std::domain_error("sturm count endpoint is a root");
    std::vector<int> sa, sb;
    sa.reserve(chain.size());
    sb.reserve(chain.size());
    for (const auto& s : chain) {
        sa.push_back(s.sign_at(a));
        sb.push_back(s.sign_at(b));
    }
    return variations(sa) - variations(sb);
}

int sturm_count_all(const std::vector<RatPolynomial>& chain) {
    if (chain.empty()) throw std::domain_error("sturm count on zero polynomial");
    std::vector<int> sa, sb;
    for (const auto& s : chain) {
        sa.push_back(s.sign_at_minus_infinity());
        sb.push_back(s.sign_at_plus_infinity());
    }
    return variations(sa) - variations(sb);
}

Int root_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
    Int lead = abs(p.leading());
    Int max_ratio_ceil = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Int num = abs(p.coeff(k));
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), lead.get_mpz_t());
        if (q > max_ratio_ceil) max_ratio_ceil = q;
    }
    return max_ratio_ceil + 1;
}

} // namespace afinv
