#include "afinv/real_algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace afinv {

namespace {

std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    std::vector<Int> out;
    if (n == 0) return out;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

// Monic synthetic division by (x - r); requires r to be a root.
IntPolynomial divide_by_root(const IntPolynomial& p, const Int& r) {
    IntPolynomial lin{-r, Int(1)};
    return p.divide_exact(lin);
}

} // namespace

RealAlgebraicNumber RealAlgebraicNumber::make_root(IntPolynomial minpoly, RationalInterval interval) {
    if (minpoly.is_zero() || minpoly.degree() < 1)
        throw std::invalid_argument("defining polynomial must be nonconstant");
    minpoly = minpoly.primitive_part();
    if (!(interval.lo < interval.hi) && !(interval.lo == interval.hi))
        throw std::invalid_argument("invalid isolating interval");
    RealAlgebraicNumber x;
    x.minpoly_ = minpoly;
    x.interval_ = std::move(interval);
    if (minpoly.degree() == 1) {
        Rational root = make_rational(-minpoly.coeff(0), minpoly.coeff(1));
        if (!(x.interval_.lo < root && root < x.interval_.hi))
            throw std::invalid_argument("interval does not isolate the rational root");
        x.lo_sign_ = minpoly.sign_at(x.interval_.lo);
        return x;
    }
    if (!is_squarefree(minpoly))
        throw std::invalid_argument("defining polynomial must be square-free");
    int slo = minpoly.sign_at(x.interval_.lo);
    int shi = minpoly.sign_at(x.interval_.hi);
    if (slo == 0 || shi == 0)
        throw std::invalid_argument("isolating interval endpoint is a root");
    auto chain = sturm_chain(RatPolynomial(minpoly));
    if (sturm_count(chain, x.interval_.lo, x.interval_.hi) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
    x.lo_sign_ = slo;
    return x;
}

RealAlgebraicNumber RealAlgebraicNumber::from_rational(const Rational& value) {
    IntPolynomial minpoly{-value.get_num(), value.get_den()};
    RealAlgebraicNumber x;
    x.minpoly_ = minpoly.primitive_part();
    x.interval_ = RationalInterval(value - 1, value + 1);
    x.lo_sign_ = x.minpoly_.sign_at(x.interval_.lo);
    return x;
}

Rational RealAlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return make_rational(-minpoly_.coeff(0), minpoly_.coeff(1));
}

void RealAlgebraicNumber::refine_step() {
    if (is_rational()) {
        Rational r = rational_value();
        Rational quarter = interval_.width() / 4;
        interval_ = RationalInterval(r - quarter, r + quarter);
        lo_sign_ = minpoly_.sign_at(interval_.lo);
        return;
    }
    Rational mid = interval_.midpoint();
    int s = minpoly_.sign_at(mid);
    if (s == 0) {
        // Only reachable when the defining polynomial has a rational root that
        // is not this one; nudge the split point.
        mid = (interval_.lo + mid) / 2;
        s = minpoly_.sign_at(mid);
        if (s == 0) throw std::logic_error("bisection hit two rational roots");
    }
    if (s == lo_sign_)
        interval_.lo = mid;
    else
        interval_.hi = mid;
}

RealAlgebraicNumber RealAlgebraicNumber::refined(const Rational& max_width) const {
    RealAlgebraicNumber x = *this;
    while (!(x.interval_.width() < max_width)) x.refine_step();
    return x;
}

int RealAlgebraicNumber::sign() const {
    if (is_rational()) return sgn(rational_value());
    RealAlgebraicNumber x = *this;
    if (minpoly_.coeff(0) == 0) {
        // 0 is a root of the defining polynomial; it is this root iff it lies
        // in the isolating interval.
        if (x.interval_.lo < 0 && 0 < x.interval_.hi) return 0;
    }
    while (x.interval_.contains_zero()) x.refine_step();
    return x.interval_.certain_sign();
}

int RealAlgebraicNumber::compare(const RealAlgebraicNumber& other) const {
    if (is_rational() && other.is_rational())
        return sgn(Rational(rational_value() - other.rational_value()));
    RealAlgebraicNumber a = *this, b = other;
    IntPolynomial g =
        (a.minpoly_ == b.minpoly_) ? a.minpoly_ : poly_gcd(a.minpoly_, b.minpoly_);
    std::vector<RatPolynomial> gchain;
    if (g.degree() >= 1) gchain = sturm_chain(RatPolynomial(g));
    for (int iter = 0; iter < 100000; ++iter) {
        if (a.interval_.hi < b.interval_.lo) return -1;
        if (b.interval_.hi < a.interval_.lo) return 1;
        if (g.degree() >= 1) {
            Rational lo = std::max(a.interval_.lo, b.interval_.lo);
            Rational hi = std::min(a.interval_.hi, b.interval_.hi);
            if (lo < hi && sturm_count(gchain, lo, hi) >= 1) return 0;
        }
        a.refine_step();
        b.refine_step();
    }
    throw std::logic_error("algebraic comparison failed to converge");
}

int RealAlgebraicNumber::compare(const Rational& other) const {
    if (is_rational()) return sgn(Rational(rational_value() - other));
    RealAlgebraicNumber a = *this;
    bool other_is_root = (minpoly_.eval(other) == 0);
    while (true) {
        if (a.interval_.hi < other) return -1;
        if (other < a.interval_.lo) return 1;
        if (other_is_root && a.interval_.lo < other && other < a.interval_.hi) return 0;
        a.refine_step();
    }
}

double RealAlgebraicNumber::to_double() const {
    Rational eps(Int(1), Int(1) << 60);
    eps.canonicalize();
    return refined(eps).interval().midpoint().get_d();
}

RationalInterval interval_eval(const IntPolynomial& f, const RationalInterval& x) {
    if (f.is_zero()) return RationalInterval(Rational(0));
    RationalInterval acc(Rational(f.leading()));
    for (int k = f.degree() - 1; k >= 0; --k) acc = acc * x + Rational(f.coeff(k));
    return acc;
}

int sign_of_poly_at(const IntPolynomial& f, const RealAlgebraicNumber& alpha) {
    if (f.is_zero()) return 0;
    if (alpha.is_rational()) return f.sign_at(alpha.rational_value());
    IntPolynomial g = poly_gcd(f, alpha.minpoly());
    if (g.degree() >= 1) {
        auto chain = sturm_chain(RatPolynomial(g));
        if (sturm_count(chain, alpha.interval().lo, alpha.interval().hi) >= 1) return 0;
    }
    RealAlgebraicNumber a = alpha;
    Rational width = a.interval().width();
    while (true) {
        RationalInterval value = interval_eval(f, a.interval());
        if (value.lo > 0) return 1;
        if (value.hi < 0) return -1;
        width = width / 2;
        a = a.refined(width);
    }
}

std::vector<IntPolynomial> factor_monic_up_to_quartic(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic() || p.degree() > 4)
        throw std::invalid_argument("expected monic polynomial of degree <= 4");
    std::vector<IntPolynomial> out;
    IntPolynomial rem = p;
    // Linear factors: integer roots divide the constant term.
    bool progress = true;
    while (progress && rem.degree() >= 1) {
        progress = false;
        if (rem.coeff(0) == 0) {
            out.push_back(IntPolynomial{Int(0), Int(1)});
            rem = divide_by_root(rem, 0);
            progress = true;
            continue;
        }
        for (const Int& d : positive_divisors(rem.coeff(0))) {
            for (int s : {1, -1}) {
                Int r = s * d;
                if (rem.eval(r) == 0) {
                    out.push_back(IntPolynomial{-r, Int(1)});
                    rem = divide_by_root(rem, r);
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }
    if (rem.degree() == 4) {
        // Search for (x^2+ax+b)(x^2+cx+d) with integer coefficients.
        const Int e3 = rem.coeff(3), e2 = rem.coeff(2), e1 = rem.coeff(1), e0 = rem.coeff(0);
        bool split = false;
        for (const Int& babs : positive_divisors(e0)) {
            for (int bs : {1, -1}) {
                Int b = bs * babs;
                if (e0 % b != 0) continue;
                Int d = e0 / b;
                Int ac = e2 - b - d;
                Int disc = e3 * e3 - 4 * ac;
                if (disc < 0 || !is_perfect_square(disc)) continue;
                Int s = isqrt(disc);
                for (int branch : {1, -1}) {
                    Int two_a = e3 + branch * s;
                    if (two_a % 2 != 0) continue;
                    Int a = two_a / 2;
                    Int c = e3 - a;
                    if (a * d + b * c == e1) {
                        out.push_back(IntPolynomial{b, a, Int(1)});
                        out.push_back(IntPolynomial{d, c, Int(1)});
                        split = true;
                        break;
                    }
                }
                if (split) break;
            }
            if (split) break;
        }
        if (!split) out.push_back(rem);
    } else if (rem.degree() >= 1) {
        // Degree 2 or 3 with no rational roots is irreducible.
        out.push_back(rem);
    }
    std::sort(out.begin(), out.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int k = a.degree(); k >= 0; --k)
            if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
        return false;
    });
    return out;
}

bool is_irreducible_up_to_quartic(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("expected monic polynomial");
    if (p.degree() < 1 || p.degree() > 4)
        throw std::invalid_argument("irreducibility test limited to degrees 1..4");
    return factor_monic_up_to_quartic(p).size() == 1;
}

namespace {

// Factors a square-free primitive polynomial for isolation purposes: all
// rational roots come out as linear factors; what remains is split into
// irreducibles when its degree is <= 4 and kept whole otherwise.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& q0) {
    std::vector<IntPolynomial> out;
    IntPolynomial q = q0;
    bool progress = true;
    while (progress && q.degree() >= 1) {
        progress = false;
        if (q.coeff(0) == 0) {
            IntPolynomial x{Int(0), Int(1)};
            out.push_back(x);
            q = q.divide_exact(x);
            progress = true;
            continue;
        }
        for (const Int& nd : positive_divisors(q.coeff(0))) {
            for (const Int& dd : positive_divisors(q.leading())) {
                for (int s : {1, -1}) {
                    Rational r = make_rational(s * nd, dd);
                    if (q.eval(r) == 0) {
                        IntPolynomial lin =
                            IntPolynomial{-r.get_num(), r.get_den()}.primitive_part();
                        out.push_back(lin);
                        q = q.divide_exact(lin);
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    if (q.degree() == 4) {
        // Reduce to the monic case via y = lc * x: lc^3 * q(y / lc).
        const Int lc = q.leading();
        std::vector<Int> monic_coeffs(5);
        monic_coeffs[4] = 1;
        Int scale = 1;
        for (int k = 3; k >= 0; --k) {
            monic_coeffs[k] = q.coeff(k) * scale;
            scale *= lc;
        }
        IntPolynomial monic = IntPolynomial(std::move(monic_coeffs));
        auto monic_factors = factor_monic_up_to_quartic(monic);
        if (monic_factors.size() > 1) {
            for (const auto& g : monic_factors) {
                std::vector<Int> back(g.degree() + 1);
                Int pw = 1;
                for (int k = 0; k <= g.degree(); ++k) {
                    back[k] = g.coeff(k) * pw;
                    pw *= lc;
                }
                out.push_back(IntPolynomial(std::move(back)).primitive_part());
            }
        } else {
            out.push_back(q);
        }
    } else if (q.degree() >= 1) {
        out.push_back(q);
    }
    return out;
}

std::vector<RealAlgebraicNumber> isolate_factor(const IntPolynomial& f) {
    std::vector<RealAlgebraicNumber> out;
    if (f.degree() == 1) {
        Rational r = make_rational(-f.coeff(0), f.coeff(1));
        out.push_back(RealAlgebraicNumber::from_rational(r));
        return out;
    }
    auto chain = sturm_chain(RatPolynomial(f));
    Int bound = root_bound(f);
    std::vector<RationalInterval> work{RationalInterval(Rational(-bound), Rational(bound))};
    while (!work.empty()) {
        RationalInterval iv = work.back();
        work.pop_back();
        int n = sturm_count(chain, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(RealAlgebraicNumber::make_root(f, iv));
            continue;
        }
        Rational mid = iv.midpoint();
        if (f.sign_at(mid) == 0)
            throw std::logic_error("bisection midpoint is a root of a factor without rational roots");
        work.emplace_back(iv.lo, mid);
        work.emplace_back(mid, iv.hi);
    }
    return out;
}

} // namespace

std::vector<RealAlgebraicNumber> real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial");
    if (p.degree() == 0) return {};
    IntPolynomial q = squarefree_part(p);
    std::vector<RealAlgebraicNumber> roots;
    for (const IntPolynomial& f : factor_squarefree(q)) {
        auto part = isolate_factor(f);
        roots.insert(roots.end(), part.begin(), part.end());
    }
    // Shrink intervals until pairwise disjoint, then order by position.
    bool overlap = true;
    while (overlap) {
        overlap = false;
        for (size_t i = 0; i < roots.size(); ++i) {
            for (size_t j = i + 1; j < roots.size(); ++j) {
                if (!roots[i].interval().disjoint_from(roots[j].interval())) {
                    Rational wi = roots[i].interval().width() / 2;
                    Rational wj = roots[j].interval().width() / 2;
                    roots[i] = roots[i].refined(wi);
                    roots[j] = roots[j].refined(wj);
                    overlap = true;
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
        return a.interval().lo < b.interval().lo;
    });
    return roots;
}

int count_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial");
    if (p.degree() == 0) return 0;
    IntPolynomial q = squarefree_part(p);
    return sturm_count_all(sturm_chain(RatPolynomial(q)));
}

} // namespace afinv
