#include "afinv/number_field.hpp"

#include <sstream>
#include <stdexcept>

#include "afinv/rat_polynomial.hpp"

namespace afinv {

std::shared_ptr<const NumberField> NumberField::create(IntPolynomial minpoly,
                                                       RealAlgebraicNumber designated_root) {
    if (minpoly.is_zero() || !minpoly.is_monic())
        throw std::invalid_argument("number field polynomial must be monic");
    if (minpoly.degree() > 4)
        throw std::invalid_argument("number fields beyond degree 4 are not supported");
    if (!is_irreducible_up_to_quartic(minpoly))
        throw std::invalid_argument("number field polynomial must be irreducible");
    if (!(designated_root.minpoly() == minpoly.primitive_part()))
        throw std::invalid_argument("designated root does not belong to the field polynomial");
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(minpoly), std::move(designated_root)));
}

namespace {

void check_same_field(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (a.field() == b.field()) return;
    if (a.field() && b.field() && a.field()->minpoly() == b.field()->minpoly() &&
        a.field()->designated_root().compare(b.field()->designated_root()) == 0)
        return;
    throw std::invalid_argument("number field elements belong to different fields");
}

// Reduce a coordinate vector of length <= 2n-1 modulo the monic field
// polynomial.
std::vector<Rational> reduce_mod(const NumberField& field, std::vector<Rational> c) {
    const int n = field.degree();
    const IntPolynomial& m = field.minpoly();
    for (int k = static_cast<int>(c.size()) - 1; k >= n; --k) {
        if (c[k] == 0) continue;
        Rational lead = c[k];
        c[k] = 0;
        for (int j = 0; j < n; ++j) c[k - n + j] -= lead * Rational(m.coeff(j));
    }
    c.resize(n, Rational(0));
    return c;
}

} // namespace

NumberFieldElement NumberFieldElement::from_coords(NumberFieldPtr field,
                                                   std::vector<Rational> coords) {
    if (!field) throw std::invalid_argument("null number field");
    if (static_cast<int>(coords.size()) > field->degree())
        coords = reduce_mod(*field, std::move(coords));
    coords.resize(field->degree(), Rational(0));
    NumberFieldElement e;
    e.field_ = std::move(field);
    e.coords_ = std::move(coords);
    return e;
}

NumberFieldElement NumberFieldElement::from_rational(NumberFieldPtr field, const Rational& value) {
    std::vector<Rational> c(field->degree(), Rational(0));
    c[0] = value;
    return from_coords(std::move(field), std::move(c));
}

NumberFieldElement NumberFieldElement::generator(NumberFieldPtr field) {
    std::vector<Rational> c(field->degree(), Rational(0));
    if (field->degree() < 2) throw std::invalid_argument("degree-1 field has no generator");
    c[1] = 1;
    return from_coords(std::move(field), std::move(c));
}

NumberFieldElement NumberFieldElement::zero(NumberFieldPtr field) {
    return from_rational(std::move(field), Rational(0));
}

NumberFieldElement NumberFieldElement::one(NumberFieldPtr field) {
    return from_rational(std::move(field), Rational(1));
}

bool NumberFieldElement::is_zero() const {
    for (const Rational& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NumberFieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational NumberFieldElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("element is not rational");
    return coords_.empty() ? Rational(0) : coords_[0];
}

NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return NumberFieldElement::from_coords(a.field_, std::move(c));
}

NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return NumberFieldElement::from_coords(a.field_, std::move(c));
}

NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same_field(a, b);
    const size_t n = a.coords_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.coords_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    return NumberFieldElement::from_coords(a.field_, std::move(prod));
}

NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a * b.inverse();
}

NumberFieldElement NumberFieldElement::operator-() const {
    std::vector<Rational> c(coords_);
    for (auto& x : c) x = -x;
    return from_coords(field_, std::move(c));
}

NumberFieldElement operator*(const Rational& c, const NumberFieldElement& a) {
    std::vector<Rational> out(a.coords_);
    for (auto& x : out) x *= c;
    return NumberFieldElement::from_coords(a.field_, std::move(out));
}

NumberFieldElement operator+(const NumberFieldElement& a, const Rational& c) {
    std::vector<Rational> out(a.coords_);
    out[0] += c;
    return NumberFieldElement::from_coords(a.field_, std::move(out));
}

NumberFieldElement operator-(const NumberFieldElement& a, const Rational& c) {
    std::vector<Rational> out(a.coords_);
    out[0] -= c;
    return NumberFieldElement::from_coords(a.field_, std::move(out));
}

bool NumberFieldElement::operator==(const NumberFieldElement& other) const {
    check_same_field(*this, other);
    return coords_ == other.coords_;
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    if (is_rational()) return from_rational(field_, Rational(1) / coords_[0]);
    // Extended Euclid in Q[x]: u*g + v*m = 1 with g this element's residue.
    RatPolynomial g{std::vector<Rational>(coords_)};
    RatPolynomial m(field_->minpoly());
    RatPolynomial r0 = m, r1 = g;
    RatPolynomial u0, u1(std::vector<Rational>{Rational(1)});
    // u0 = 0, u1 = 1 tracking coefficients of g.
    while (true) {
        auto [q, r] = r0.divmod(r1);
        if (r.is_zero()) break;
        RatPolynomial u2 = u0 - q * u1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    if (r1.degree() != 0)
        throw std::logic_error("field polynomial not coprime with nonzero element");
    Rational lead = r1.coeffs()[0];
    std::vector<Rational> inv_coords = u1.coeffs();
    for (auto& c : inv_coords) c /= lead;
    return from_coords(field_, std::move(inv_coords));
}

NumberFieldElement NumberFieldElement::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    NumberFieldElement acc = one(field_);
    NumberFieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

RationalInterval eval_coords(const std::vector<Rational>& coords, const RationalInterval& x) {
    RationalInterval acc(Rational(0));
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

int NumberFieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coords_[0]);
    RealAlgebraicNumber root = field_->designated_root();
    Rational width = root.interval().width();
    while (true) {
        RationalInterval v = eval_coords(coords_, root.interval());
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
        width /= 2;
        root = root.refined(width);
    }
}

RationalInterval NumberFieldElement::enclosure(const Rational& max_width) const {
    RealAlgebraicNumber root = field_->designated_root();
    Rational width = root.interval().width();
    while (true) {
        RationalInterval v = eval_coords(coords_, root.interval());
        if (v.width() < max_width) return v;
        width /= 2;
        root = root.refined(width);
    }
}

double NumberFieldElement::to_double() const {
    Rational eps(Int(1), Int(1) << 60);
    eps.canonicalize();
    return enclosure(eps).midpoint().get_d();
}

std::string NumberFieldElement::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coords_.size()) - 1; k >= 0; --k) {
        if (coords_[k] == 0) continue;
        Rational a = coords_[k] > 0 ? coords_[k] : Rational(-coords_[k]);
        if (first) {
            if (coords_[k] < 0) os << "-";
            first = false;
        } else {
            os << (coords_[k] < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

Int field_floor(const NumberFieldElement& x) {
    if (x.is_rational()) return floor_rat(x.rational_value());
    RealAlgebraicNumber root = x.field()->designated_root();
    Rational width = root.interval().width();
    while (true) {
        RationalInterval v = eval_coords(x.coords(), root.interval());
        Int flo = floor_rat(v.lo), fhi = floor_rat(v.hi);
        if (flo == fhi) return flo;
        width /= 2;
        root = root.refined(width);
    }
}

Int field_ceil(const NumberFieldElement& x) {
    return -field_floor(-x);
}

IntPolynomial minimal_polynomial(const NumberFieldElement& x) {
    const int n = x.field()->degree();
    // Powers of x as rows; find the first linear dependence by Gaussian
    // elimination over Q.
    std::vector<std::vector<Rational>> rows;      // reduced rows
    std::vector<std::vector<Rational>> relations; // expresses each reduced row in powers
    NumberFieldElement p = NumberFieldElement::one(x.field());
    for (int k = 0; k <= n; ++k) {
        std::vector<Rational> v = p.coords();
        std::vector<Rational> rel(k + 1, Rational(0));
        rel[k] = 1;
        // reduce v against existing rows
        for (size_t r = 0; r < rows.size(); ++r) {
            int pivot = -1;
            for (int j = 0; j < n; ++j)
                if (rows[r][j] != 0) { pivot = j; break; }
            if (pivot < 0 || v[pivot] == 0) continue;
            Rational f = v[pivot] / rows[r][pivot];
            for (int j = 0; j < n; ++j) v[j] -= f * rows[r][j];
            for (size_t j = 0; j < relations[r].size(); ++j) rel[j] -= f * relations[r][j];
        }
        bool zero = true;
        for (int j = 0; j < n; ++j)
            if (v[j] != 0) { zero = false; break; }
        if (zero) {
            // rel gives sum rel[i] * x^i = 0 with rel[k] = 1: monic minimal poly.
            RatPolynomial m(std::move(rel));
            return m.primitive_int_part();
        }
        rows.push_back(std::move(v));
        relations.push_back(std::move(rel));
        p = p * x;
    }
    throw std::logic_error("minimal polynomial search exceeded field degree");
}

RealAlgebraicNumber to_algebraic(const NumberFieldElement& x) {
    if (x.is_rational()) return RealAlgebraicNumber::from_rational(x.rational_value());
    IntPolynomial m = minimal_polynomial(x);
    std::vector<RealAlgebraicNumber> roots = real_roots(m);
    Rational width = Rational(1);
    while (true) {
        RationalInterval box = x.enclosure(width);
        int hits = 0;
        const RealAlgebraicNumber* match = nullptr;
        for (const auto& r : roots) {
            if (!box.disjoint_from(r.interval())) {
                ++hits;
                match = &r;
            }
        }
        if (hits == 1) return *match;
        width /= 4;
    }
}

} // namespace afinv
