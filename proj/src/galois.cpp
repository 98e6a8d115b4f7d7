#include "afinv/galois.hpp"

#include <stdexcept>

#include "afinv/real_algebraic.hpp"

namespace afinv {

GaloisGroupTag make_group_tag(GaloisTag tag) {
    switch (tag) {
        case GaloisTag::C2: return {tag, 2};
        case GaloisTag::C3: return {tag, 3};
        case GaloisTag::S3: return {tag, 6};
        case GaloisTag::C4: return {tag, 4};
        case GaloisTag::V4: return {tag, 4};
        case GaloisTag::D4: return {tag, 8};
        case GaloisTag::A4: return {tag, 12};
        case GaloisTag::S4: return {tag, 24};
    }
    throw std::logic_error("unknown group tag");
}

std::string to_string(GaloisTag tag) {
    switch (tag) {
        case GaloisTag::C2: return "C2";
        case GaloisTag::C3: return "C3";
        case GaloisTag::S3: return "S3";
        case GaloisTag::C4: return "C4";
        case GaloisTag::V4: return "V4";
        case GaloisTag::D4: return "D4";
        case GaloisTag::A4: return "A4";
        case GaloisTag::S4: return "S4";
    }
    throw std::logic_error("unknown group tag");
}

std::optional<GaloisTag> parse_galois_tag(const std::string& s) {
    for (GaloisTag t : {GaloisTag::C2, GaloisTag::C3, GaloisTag::S3, GaloisTag::C4,
                        GaloisTag::V4, GaloisTag::D4, GaloisTag::A4, GaloisTag::S4})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

GroupOrderTable group_table(GaloisTag tag) {
    switch (tag) {
        case GaloisTag::C2: return {make_group_tag(tag), {1, 2}, {1, 2}};
        case GaloisTag::C3: return {make_group_tag(tag), {1, 3}, {1, 3}};
        case GaloisTag::S3: return {make_group_tag(tag), {1, 2, 3, 6}, {1, 3, 6}};
        case GaloisTag::C4: return {make_group_tag(tag), {1, 2, 4}, {1, 2, 4}};
        case GaloisTag::V4: return {make_group_tag(tag), {1, 2, 4}, {1, 2, 4}};
        case GaloisTag::D4: return {make_group_tag(tag), {1, 2, 4, 8}, {1, 2, 4, 8}};
        case GaloisTag::A4: return {make_group_tag(tag), {1, 2, 3, 4, 12}, {1, 4, 12}};
        case GaloisTag::S4:
            return {make_group_tag(tag), {1, 2, 3, 4, 6, 8, 12, 24}, {1, 4, 12, 24}};
    }
    throw std::logic_error("unknown group tag");
}

bool is_irreducible(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("expected a monic polynomial");
    if (p.degree() < 1 || p.degree() > 4)
        throw std::invalid_argument("irreducibility test out of scope for degree " +
                                    std::to_string(p.degree()));
    return is_irreducible_up_to_quartic(p);
}

IntPolynomial resolvent_cubic(const IntPolynomial& quartic) {
    if (quartic.degree() != 4 || !quartic.is_monic())
        throw std::invalid_argument("resolvent cubic requires a monic quartic");
    const Int a = quartic.coeff(3), b = quartic.coeff(2), c = quartic.coeff(1),
              d = quartic.coeff(0);
    return IntPolynomial{4 * b * d - a * a * d - c * c, a * c - 4 * d, -b, Int(1)};
}

Int squarefree_kernel(const Int& n) {
    if (n == 0) return 0;
    Int m = abs(n);
    Int out = 1;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e % 2 != 0) out *= d;
    }
    out *= m; // leftover prime
    return sgn(n) < 0 ? -out : out;
}

QuarticResolventAnalysis analyze_resolvent(const IntPolynomial& quartic) {
    QuarticResolventAnalysis out;
    out.resolvent = resolvent_cubic(quartic);
    auto factors = factor_monic_up_to_quartic(out.resolvent);
    std::vector<Int> roots;
    IntPolynomial quadratic_cofactor;
    for (const auto& f : factors) {
        if (f.degree() == 1)
            roots.push_back(-f.coeff(0));
        else
            quadratic_cofactor = f;
    }
    for (const Int& r : roots) out.rational_roots.emplace_back(r);
    if (roots.size() == 3) {
        out.kind = ResolventCase::splits_over_q;
    } else if (roots.size() == 1) {
        out.kind = ResolventCase::unique_rational_root;
        out.unique_root = roots[0];
        out.splitting_field_disc = squarefree_kernel(discriminant(quadratic_cofactor));
    } else if (roots.empty()) {
        out.kind = ResolventCase::irreducible;
    } else {
        // Two rational roots of a cubic force a third.
        throw std::logic_error("impossible rational-root count for a cubic");
    }
    return out;
}

bool splits_over_quadratic(const IntPolynomial& q, const std::optional<Int>& d) {
    if (q.degree() != 2 || !q.is_monic())
        throw std::invalid_argument("split test requires a monic quadratic");
    Int disc = discriminant(q);
    if (disc == 0 || is_perfect_square(disc)) return true;
    if (d && is_perfect_square(disc * *d)) return true;
    return false;
}

GaloisGroupTag galois_group(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("expected a monic polynomial");
    const int n = p.degree();
    if (n < 2 || n > 4)
        throw std::invalid_argument("galois group out of scope for degree " + std::to_string(n));
    if (!is_irreducible(p)) throw std::invalid_argument("galois group requires irreducible input");

    if (n == 2) return make_group_tag(GaloisTag::C2);
    if (n == 3)
        return make_group_tag(is_perfect_square(discriminant(p)) ? GaloisTag::C3 : GaloisTag::S3);

    QuarticResolventAnalysis res = analyze_resolvent(p);
    switch (res.kind) {
        case ResolventCase::splits_over_q:
            return make_group_tag(GaloisTag::V4);
        case ResolventCase::unique_rational_root: {
            const Int t = *res.unique_root;
            const Int a = p.coeff(3), b = p.coeff(2), d0 = p.coeff(0);
            IntPolynomial h1{d0, -t, Int(1)};
            IntPolynomial h2{b - t, a, Int(1)};
            bool both_split = splits_over_quadratic(h1, res.splitting_field_disc) &&
                              splits_over_quadratic(h2, res.splitting_field_disc);
            return make_group_tag(both_split ? GaloisTag::C4 : GaloisTag::D4);
        }
        case ResolventCase::irreducible:
            return make_group_tag(is_perfect_square(discriminant(p)) ? GaloisTag::A4
                                                                     : GaloisTag::S4);
    }
    throw std::logic_error("unreachable resolvent case");
}

int aut_order_of_pf_field(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("expected a monic polynomial");
    const int n = p.degree();
    if (n < 1 || n > 4)
        throw std::invalid_argument("automorphism count out of scope for degree " +
                                    std::to_string(n));
    if (!is_irreducible(p)) throw std::invalid_argument("automorphism count requires irreducible input");
    if (n == 1) return 1;
    if (count_real_roots(p) == 0)
        throw std::domain_error("polynomial has no real root: no real embedding");
    if (n == 2) return 2;
    if (n == 3) return is_perfect_square(discriminant(p)) ? 3 : 1;
    // Degree 4: the number of conjugate roots landing inside Q(lambda) is
    // determined by the group: the point stabilizer H has [N_G(H):H] = 4 for
    // V4 and C4 (the field is the splitting field), 2 for D4, 1 for A4/S4.
    switch (galois_group(p).tag) {
        case GaloisTag::V4:
        case GaloisTag::C4: return 4;
        case GaloisTag::D4: return 2;
        case GaloisTag::A4:
        case GaloisTag::S4: return 1;
        default: break;
    }
    throw std::logic_error("unexpected quartic group tag");
}

} // namespace afinv
