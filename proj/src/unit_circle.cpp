#include "afinv/unit_circle.hpp"

#include <stdexcept>

#include "afinv/rat_polynomial.hpp"
#include "afinv/real_algebraic.hpp"

namespace afinv {

namespace {

// Q(w) = (1-w)^d * f((1+w)/(1-w)) with denominators cleared.
IntPolynomial moebius_transform(const IntPolynomial& f) {
    const int d = f.degree();
    IntPolynomial one_plus{Int(1), Int(1)};
    IntPolynomial one_minus{Int(1), Int(-1)};
    std::vector<IntPolynomial> pow_plus(d + 1), pow_minus(d + 1);
    pow_plus[0] = IntPolynomial::constant(1);
    pow_minus[0] = IntPolynomial::constant(1);
    for (int k = 1; k <= d; ++k) {
        pow_plus[k] = pow_plus[k - 1] * one_plus;
        pow_minus[k] = pow_minus[k - 1] * one_minus;
    }
    IntPolynomial q;
    for (int k = 0; k <= d; ++k) {
        if (f.coeff(k) == 0) continue;
        q = q + f.coeff(k) * (pow_plus[k] * pow_minus[d - k]);
    }
    return q;
}

IntPolynomial substitute_negated(const IntPolynomial& p) {
    std::vector<Int> c(p.coeffs());
    for (size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return IntPolynomial(std::move(c));
}

// For even C(w), the polynomial c with c(w^2) = C(w).
IntPolynomial even_part(const IntPolynomial& c_poly) {
    std::vector<Int> out;
    for (int k = 0; k <= c_poly.degree(); ++k) {
        if (k % 2 == 1) {
            if (c_poly.coeff(k) != 0) throw std::logic_error("polynomial is not even");
            continue;
        }
        out.push_back(c_poly.coeff(k));
    }
    return IntPolynomial(std::move(out));
}

// Octant label of a nonzero sign pair; axis states are even, open quadrants
// odd.  Unit is an eighth turn (pi/4).
int octant_label(int sr, int ss) {
    if (sr > 0 && ss == 0) return 0;
    if (sr > 0 && ss > 0) return 1;
    if (sr == 0 && ss > 0) return 2;
    if (sr < 0 && ss > 0) return 3;
    if (sr < 0 && ss == 0) return 4;
    if (sr < 0 && ss < 0) return 5;
    if (sr == 0 && ss < 0) return 6;
    if (sr > 0 && ss < 0) return 7;
    throw std::logic_error("sign pair (0, 0) in winding computation");
}

// #roots(Re w < 0) - #roots(Re w > 0) for a square-free Q1 with no roots on
// the imaginary axis and no (w, -w) root pairs.  Tracks the exact argument
// variation of Q1(iy) for y from -inf to +inf in eighth turns.
int winding_imbalance(const IntPolynomial& q1) {
    const int d = q1.degree();
    if (d == 0) return 0;
    // Q1(iy) = R(y) + i*S(y)
    std::vector<Int> rc, sc;
    for (int k = 0; k <= d; ++k) {
        Int c = q1.coeff(k);
        switch (k % 4) {
            case 0: if (static_cast<int>(rc.size()) <= k) rc.resize(k + 1, Int(0)); rc[k] = c; break;
            case 1: if (static_cast<int>(sc.size()) <= k) sc.resize(k + 1, Int(0)); sc[k] = c; break;
            case 2: if (static_cast<int>(rc.size()) <= k) rc.resize(k + 1, Int(0)); rc[k] = -c; break;
            case 3: if (static_cast<int>(sc.size()) <= k) sc.resize(k + 1, Int(0)); sc[k] = -c; break;
        }
    }
    IntPolynomial r(std::move(rc)), s(std::move(sc));
    if (r.is_zero() || s.is_zero())
        throw std::logic_error("degenerate real/imaginary split after symmetric-factor removal");
    if (poly_gcd(r, s).degree() != 0)
        throw std::logic_error("imaginary-axis root survived symmetric-factor removal");

    std::vector<RealAlgebraicNumber> marks = real_roots(r * s);
    // One rational sample strictly between consecutive marks plus one below
    // and one above all of them.
    std::vector<Rational> samples;
    if (marks.empty()) {
        samples.push_back(Rational(0));
    } else {
        samples.push_back(marks.front().interval().lo - 1);
        for (size_t j = 0; j + 1 < marks.size(); ++j)
            samples.push_back((marks[j].interval().hi + marks[j + 1].interval().lo) / 2);
        samples.push_back(marks.back().interval().hi + 1);
    }

    RatPolynomial rr(r), ss(s);
    std::vector<int> labels;
    labels.push_back(octant_label(rr.sign_at_minus_infinity() * (r.degree() > s.degree() ? 1 : 0),
                                  ss.sign_at_minus_infinity() * (s.degree() > r.degree() ? 1 : 0)));
    for (const Rational& x : samples) labels.push_back(octant_label(r.sign_at(x), s.sign_at(x)));
    labels.push_back(octant_label(rr.sign_at_plus_infinity() * (r.degree() > s.degree() ? 1 : 0),
                                  ss.sign_at_plus_infinity() * (s.degree() > r.degree() ? 1 : 0)));

    long total = 0;
    for (size_t i = 0; i + 1 < labels.size(); ++i) {
        int diff = labels[i + 1] - labels[i];
        int d8 = ((diff % 8) + 8) % 8;
        int step = d8 <= 4 ? d8 : d8 - 8;
        if (step < -2 || step > 2)
            throw std::logic_error("argument variation step exceeds a quarter turn");
        total += step;
    }
    if (total % 4 != 0) throw std::logic_error("argument variation is not a multiple of pi");
    return static_cast<int>(total / 4);
}

struct Partition3 {
    int lhp = 0, axis = 0, rhp = 0;
};

// Partition of the roots of a square-free factor f (f(0) != 0) relative to
// the unit circle: returns (inside, on, outside).
Partition3 partition_squarefree(IntPolynomial f) {
    Partition3 out;
    IntPolynomial x_minus_1{Int(-1), Int(1)};
    IntPolynomial x_plus_1{Int(1), Int(1)};
    if (f.eval(Int(1)) == 0) {
        f = f.divide_exact(x_minus_1);
        out.axis += 1;
    }
    if (f.eval(Int(-1)) == 0) {
        f = f.divide_exact(x_plus_1);
        out.axis += 1;
    }
    if (f.degree() == 0) return out;

    IntPolynomial q = moebius_transform(f).primitive_part();
    if (q.degree() != f.degree())
        throw std::logic_error("Moebius transform dropped degree unexpectedly");
    IntPolynomial c_sym = poly_gcd(q, substitute_negated(q));
    int axis_pairs = 0;
    int sym_pairs = 0;
    if (c_sym.degree() > 0) {
        IntPolynomial c_even = even_part(c_sym);
        // Negative real roots of c_even correspond to conjugate pairs on the
        // imaginary axis, i.e. on the unit circle.
        if (c_even.degree() > 0) {
            auto chain = sturm_chain(RatPolynomial(c_even));
            Rational bound(root_bound(c_even));
            if (c_even.sign_at(-bound) == 0 || c_even.coeff(0) == 0)
                throw std::logic_error("unexpected root at symmetric-factor boundary");
            axis_pairs = sturm_count(chain, -bound, Rational(0));
        }
        sym_pairs = (c_sym.degree() - 2 * axis_pairs) / 2;
        q = q.divide_exact(c_sym).primitive_part();
    }
    out.axis += 2 * axis_pairs;

    int imbalance = winding_imbalance(q);
    int deg = q.degree();
    if ((deg + imbalance) % 2 != 0) throw std::logic_error("half-plane imbalance parity error");
    out.lhp = (deg + imbalance) / 2 + sym_pairs;
    out.rhp = (deg - imbalance) / 2 + sym_pairs;
    return out;
}

} // namespace

CirclePartition unit_circle_partition(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("partition of the zero polynomial");
    if (p.coeff(0) == 0) throw std::invalid_argument("partition requires p(0) != 0");
    CirclePartition out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Partition3 part = partition_squarefree(factor);
        out.inside += mult * part.lhp;
        out.on += mult * part.axis;
        out.outside += mult * part.rhp;
    }
    return out;
}

bool is_hyperbolic(const IntMatrix& m) {
    if (!m.is_unimodular())
        throw std::invalid_argument("matrix is not unimodular: not a torus-bundle monodromy");
    return unit_circle_partition(char_poly(m)).on == 0;
}

bool is_tight(const IntMatrix& m) {
    if (!is_hyperbolic(m)) throw std::invalid_argument("matrix is not hyperbolic");
    CirclePartition part = unit_circle_partition(char_poly(m));
    return part.inside == 1 || part.outside == 1;
}

} // namespace afinv
