#pragma once

#include <gmpxx.h>
#include <string>
#include <utility>

namespace afinv {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical rational from a numerator/denominator pair: reduced, denominator > 0.
inline Rational make_rational(const Int& num, const Int& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_rat(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Closed interval with rational endpoints; the basic carrier for certified
// real evaluation of algebraic quantities.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit RationalInterval(const Rational& v) : lo(v), hi(v) {}

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    // -1, 0, +1 when the sign is decided by the interval; 0 only for the
    // degenerate point interval at zero.  Call sites must ensure the interval
    // has been refined enough before trusting a zero.
    int certain_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    RationalInterval operator-() const { return {-hi, -lo}; }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rational lo = p1, hi = p1;
        for (const Rational* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (*p > hi) hi = *p;
        }
        return {lo, hi};
    }
    friend RationalInterval operator*(const Rational& c, const RationalInterval& a) {
        if (c >= 0) return {c * a.lo, c * a.hi};
        return {c * a.hi, c * a.lo};
    }
    friend RationalInterval operator+(const RationalInterval& a, const Rational& c) {
        return {a.lo + c, a.hi + c};
    }

    bool disjoint_from(const RationalInterval& other) const {
        return hi < other.lo || other.hi < lo;
    }
};

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace afinv
