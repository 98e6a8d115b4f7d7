#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "afinv/int_polynomial.hpp"
#include "afinv/numeric.hpp"

namespace afinv {

// Galois groups arising for irreducible monic integer polynomials of
// degree 2..4.
enum class GaloisTag { C2, C3, S3, C4, V4, D4, A4, S4 };

struct GaloisGroupTag {
    GaloisTag tag;
    int order;
    bool operator==(const GaloisGroupTag&) const = default;
};

GaloisGroupTag make_group_tag(GaloisTag tag);
std::string to_string(GaloisTag tag);
std::optional<GaloisTag> parse_galois_tag(const std::string& s);

struct GroupOrderTable {
    GaloisGroupTag tag;
    std::set<int> subgroup_orders;
    std::set<int> normal_subgroup_orders;
};

// Frozen order sets (validated against brute-force subgroup enumeration in
// the test suite).
GroupOrderTable group_table(GaloisTag tag);

// No nontrivial factorization over Z (equivalently Q).  Monic input,
// 1 <= deg <= 4; larger degrees are rejected as out of scope.
bool is_irreducible(const IntPolynomial& p);

// x^3 - b x^2 + (ac - 4d) x + (4bd - a^2 d - c^2) for x^4+ax^3+bx^2+cx+d.
IntPolynomial resolvent_cubic(const IntPolynomial& quartic);

enum class ResolventCase { splits_over_q, unique_rational_root, irreducible };

struct QuarticResolventAnalysis {
    IntPolynomial resolvent;
    std::vector<Rational> rational_roots;
    ResolventCase kind;
    // Square-free D with L = Q(sqrt(D)) in the unique-root case.
    std::optional<Int> splitting_field_disc;
    std::optional<Int> unique_root; // t (integer: the resolvent is monic)
};

QuarticResolventAnalysis analyze_resolvent(const IntPolynomial& quartic);

// True iff disc(q) is a square in Q(sqrt(D)); D absent means L = Q.
bool splits_over_quadratic(const IntPolynomial& q, const std::optional<Int>& d);

// Galois group of the splitting field; p monic irreducible, 2 <= deg <= 4.
GaloisGroupTag galois_group(const IntPolynomial& p);

// Number of roots of p lying in Q(lambda) for the designated real root
// lambda, i.e. |Aut(Q(lambda)/Q)|.  Requires p monic irreducible of degree
// <= 4 with at least one real root.
int aut_order_of_pf_field(const IntPolynomial& p);

// Square-free kernel of an integer: n with all square factors removed,
// sign preserved.
Int squarefree_kernel(const Int& n);

} // namespace afinv
