#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "afinv/int_polynomial.hpp"
#include "afinv/number_field.hpp"
#include "afinv/numeric.hpp"
#include "afinv/real_algebraic.hpp"
#include "oracles.hpp"

using namespace afinv;

namespace {

IntPolynomial poly(std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

NumberFieldPtr cubic_field() {
    // Q(c) for the root of x^3 - 3x + 1 in (0, 1)
    IntPolynomial p = poly({1, -3, 0, 1});
    for (const auto& r : real_roots(p))
        if (r.compare(Rational(0)) > 0 && r.compare(Rational(1)) < 0) return NumberField::create(p, r);
    REQUIRE(false);
    return nullptr;
}

} // namespace

TEST_CASE("rationals are canonical") {
    Rational q = make_rational(Int(2), Int(-4));
    CHECK(q.get_num() == -1);
    CHECK(q.get_den() == 2);
    CHECK(floor_rat(make_rational(Int(7), Int(2))) == 3);
    CHECK(floor_rat(make_rational(Int(-7), Int(2))) == -4);
    CHECK(ceil_rat(make_rational(Int(7), Int(2))) == 4);
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(Int(81)));
    CHECK(is_perfect_square(Int(49)));
    CHECK(is_perfect_square(Int(0)));
    CHECK_FALSE(is_perfect_square(Int(-27)));
    CHECK_FALSE(is_perfect_square(Int(2)));
}

TEST_CASE("polynomial arithmetic basics") {
    IntPolynomial a = poly({1, 2, 1}); // (x+1)^2
    IntPolynomial b = poly({-1, 1});   // x-1
    CHECK((a * b).coeffs() == poly({-1, -1, 1, 1}).coeffs());
    CHECK(a.eval(Int(2)) == 9);
    CHECK(poly({1, -3, 0, 1}).str() == "x^3 - 3x + 1");
    CHECK(poly({1, 0, -3, 1}).str() == "x^3 - 3x^2 + 1");
    CHECK((a - a).is_zero());
    CHECK(a.derivative() == poly({2, 2}));
    CHECK(poly({2, 4, 6}).primitive_part() == poly({1, 2, 3}));
    CHECK(poly({-1, 0, 2}).reversed() == poly({2, 0, -1}));
    CHECK(poly({6, 5, 1}).divide_exact(poly({2, 1})) == poly({3, 1}));
    CHECK_THROWS(poly({1, 5, 1}).divide_exact(poly({2, 1})));
}

TEST_CASE("gcd and square-free machinery") {
    IntPolynomial p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1}); // (x-1)^2 (x+2)
    CHECK(poly_gcd(p, p.derivative()) == poly({-1, 1}));
    CHECK(squarefree_part(p) == poly({-1, 1}) * poly({2, 1}));
    auto decomp = squarefree_decomposition(p);
    REQUIRE(decomp.size() == 2);
    CHECK(decomp[0].first == poly({2, 1}));
    CHECK(decomp[0].second == 1);
    CHECK(decomp[1].first == poly({-1, 1}));
    CHECK(decomp[1].second == 2);
}

TEST_CASE("resultants") {
    CHECK(resultant(poly({-1, 1}), poly({1, 1})) == 2);
    CHECK(resultant(poly({-2, 0, 1}), poly({-3, 0, 1})) == 1);
    CHECK(resultant(poly({1, 3, 1}), poly({1, 3, 1})) == 0);
    // multiplicativity: res(pq, r) = res(p, r) res(q, r)
    IntPolynomial p = poly({1, 2, 1}), q = poly({-3, 1}), r = poly({5, 0, 1});
    CHECK(resultant(p * q, r) == resultant(p, r) * resultant(q, r));
}

TEST_CASE("discriminants") {
    CHECK(discriminant(poly({1, -3, 0, 1})) == 81);   // x^3 - 3x + 1
    CHECK(discriminant(poly({1, 0, -3, 1})) == 81);   // x^3 - 3x^2 + 1
    CHECK(discriminant(poly({1, -2, -1, 1})) == 49);  // x^3 - x^2 - 2x + 1
    CHECK(discriminant(poly({1, -2, 1, 1})) == -31);  // x^3 + x^2 - 2x + 1
    CHECK(discriminant(poly({-1, -1, 1})) == 5);      // x^2 - x - 1
    CHECK(discriminant(poly({-1, 0, 0, 0, 1})) == -256);
}

TEST_CASE("cubic discriminant formula identity") {
    // disc(x^3 + b x^2 + c x + 1) = -4b^3 + b^2 c^2 + 18 b c - 4 c^3 - 27
    for (long b = -10; b <= 10; ++b) {
        for (long c = -10; c <= 10; ++c) {
            Int bb(b), cc(c);
            Int expected = -4 * bb * bb * bb + bb * bb * cc * cc + 18 * bb * cc - 4 * cc * cc * cc - 27;
            CHECK(discriminant(poly({1, c, b, 1})) == expected);
        }
    }
}

TEST_CASE("real root isolation on the named examples") {
    auto r1 = real_roots(poly({-2, 0, 1})); // x^2 - 2
    REQUIRE(r1.size() == 2);
    CHECK(std::abs(r1[0].to_double() + 1.4142135) < 1e-6);
    CHECK(std::abs(r1[1].to_double() - 1.4142135) < 1e-6);

    auto r2 = real_roots(poly({1, -3, 0, 1})); // x^3 - 3x + 1, disc 81 > 0
    REQUIRE(r2.size() == 3);
    CHECK(std::abs(r2[0].to_double() + 1.8793852) < 1e-6);
    CHECK(std::abs(r2[1].to_double() - 0.3472964) < 1e-6);
    CHECK(std::abs(r2[2].to_double() - 1.5320889) < 1e-6);

    CHECK(real_roots(poly({1, 0, 1})).empty()); // x^2 + 1
}

TEST_CASE("real root counts agree with an independent Sturm oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(1, 5);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int d = deg(rng);
        std::vector<long> cs(d + 1);
        for (auto& c : cs) c = coeff(rng);
        cs[d] = cs[d] == 0 ? 1 : cs[d];
        IntPolynomial p = poly(cs);
        if (trial % 3 == 0) p = p * p; // exercise multiplicity handling
        if (p.degree() < 1) continue;
        oracles::QPoly qp;
        for (const Int& c : p.coeffs()) qp.emplace_back(mpq_class(c));
        int expected = oracles::sturm_real_root_count(qp);
        CHECK(static_cast<int>(real_roots(p).size()) == expected);
        CHECK(count_real_roots(p) == expected);
        if (expected > 0) ++nontrivial;
    }
    CHECK(nontrivial > 30);
}

TEST_CASE("isolating intervals are disjoint and sorted") {
    IntPolynomial p = poly({-1, 1}) * poly({-2, 1}) * poly({-2, 0, 1}) * poly({1, 1, 1});
    auto roots = real_roots(p); // 1, 2, +/-sqrt(2); complex pair discarded
    REQUIRE(roots.size() == 4);
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        CHECK(roots[i].interval().disjoint_from(roots[i + 1].interval()));
        CHECK(roots[i].compare(roots[i + 1]) < 0);
    }
    CHECK(roots[0].compare(roots[0]) == 0);
}

TEST_CASE("algebraic number comparisons and signs") {
    auto sqrt2 = real_roots(poly({-2, 0, 1}))[1];
    auto sqrt3 = real_roots(poly({-3, 0, 1}))[1];
    CHECK(sqrt2.compare(sqrt3) < 0);
    CHECK(sqrt2.sign() == 1);
    CHECK(real_roots(poly({-2, 0, 1}))[0].sign() == -1);
    CHECK(sqrt2.compare(make_rational(Int(3), Int(2))) < 0);
    CHECK(sqrt2.compare(Rational(1)) > 0);
    auto sqrt2_again = real_roots(poly({-8, 0, 0, 0, 2}))[1]; // 2x^4 - 8 has roots +/-sqrt(2)
    CHECK(sqrt2.compare(sqrt2_again) == 0);

    CHECK(sign_of_poly_at(poly({-2, 0, 1}), sqrt2) == 0);
    CHECK(sign_of_poly_at(poly({-1, 1}), sqrt2) == 1);
    CHECK(sign_of_poly_at(poly({-2, 1}), sqrt2) == -1);
}

TEST_CASE("number field arithmetic in Q[x]/(x^3 - 3x + 1)") {
    NumberFieldPtr k = cubic_field();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    auto random_elem = [&]() {
        std::vector<Rational> c;
        for (int i = 0; i < 3; ++i) c.push_back(make_rational(Int(num(rng)), Int(den(rng))));
        return NumberFieldElement::from_coords(k, c);
    };
    for (int trial = 0; trial < 40; ++trial) {
        NumberFieldElement a = random_elem(), b = random_elem(), c = random_elem();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == NumberFieldElement::one(k));
            CHECK((a / a) == NumberFieldElement::one(k));
        }
    }
    // the generator satisfies its polynomial
    NumberFieldElement t = NumberFieldElement::generator(k);
    CHECK(t * t * t - Rational(3) * t + Rational(1) == NumberFieldElement::zero(k));
}

TEST_CASE("field floor") {
    // golden ratio in Q[x]/(x^2 - x - 1)
    IntPolynomial fib = poly({-1, -1, 1});
    auto roots = real_roots(fib);
    NumberFieldPtr k = NumberField::create(fib, roots[1]); // positive root
    NumberFieldElement phi = NumberFieldElement::generator(k);
    CHECK(field_floor(phi) == 1);
    CHECK(field_ceil(phi) == 2);
    CHECK(field_floor(NumberFieldElement::from_rational(k, make_rational(Int(7), Int(2)))) == 3);
    CHECK(field_floor(NumberFieldElement::from_rational(k, Rational(-3))) == -3);

    NumberFieldPtr k3 = cubic_field();
    NumberFieldElement c = NumberFieldElement::generator(k3); // root near 0.347
    CHECK(field_floor(c) == 0);

    // floor(x) <= x < floor(x) + 1, checked exactly and at tight width
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    Rational tight(Int(1), Int(1) << 40);
    tight.canonicalize();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> coords;
        for (int i = 0; i < 3; ++i) coords.push_back(make_rational(Int(num(rng)), Int(den(rng))));
        NumberFieldElement x = NumberFieldElement::from_coords(k3, coords);
        Int f = field_floor(x);
        CHECK(x.compare(Rational(f)) >= 0);
        CHECK(x.compare(Rational(f + 1)) < 0);
        RationalInterval box = x.enclosure(tight);
        CHECK(Rational(f) <= box.hi);
        CHECK(box.lo < Rational(f + 1));
    }
}

TEST_CASE("minimal polynomials of field elements") {
    IntPolynomial fib = poly({-1, -1, 1});
    auto roots = real_roots(fib);
    NumberFieldPtr k = NumberField::create(fib, roots[1]);
    NumberFieldElement phi = NumberFieldElement::generator(k);
    CHECK(minimal_polynomial(phi) == fib);
    CHECK(minimal_polynomial(phi * phi) == poly({1, -3, 1})); // phi^2 = phi + 1 has minpoly x^2-3x+1
    CHECK(minimal_polynomial(NumberFieldElement::from_rational(k, make_rational(Int(2), Int(3)))) ==
          poly({-2, 3}));
    RealAlgebraicNumber phi_sq = to_algebraic(phi * phi);
    CHECK(std::abs(phi_sq.to_double() - 2.6180339) < 1e-6);
}

TEST_CASE("degree <= 4 factorization") {
    CHECK(is_irreducible_up_to_quartic(poly({1, -3, 0, 1})));
    CHECK(is_irreducible_up_to_quartic(poly({-1, -1, 1})));
    CHECK_FALSE(is_irreducible_up_to_quartic(poly({1, 2, 2, 2, 1}))); // root -1
    CHECK_FALSE(is_irreducible_up_to_quartic(poly({4, 0, 0, 0, 1}))); // (x^2-2x+2)(x^2+2x+2)
    CHECK(is_irreducible_up_to_quartic(poly({1, 0, -10, 0, 1})));     // minpoly of sqrt2+sqrt3
    auto f = factor_monic_up_to_quartic(poly({4, 0, 0, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0] * f[1] == poly({4, 0, 0, 0, 1}));
}
