#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "afinv/galois.hpp"
#include "afinv/int_matrix.hpp"
#include "afinv/json_util.hpp"
#include "afinv/unit_circle.hpp"

namespace afinv {

// Full invariant record for one monodromy matrix.  Theory-hypothesis
// failures (reducible, not tight, out-of-scope degree) are recorded, never
// thrown.
struct BundleAnalysis {
    IntMatrix matrix{1};
    IntPolynomial char_polynomial;
    bool unimodular = false;
    bool hyperbolic = false;
    bool tight = false;
    std::optional<bool> irreducible; // decidable only up to degree 4
    CirclePartition partition;
    Int discriminant = 0; // 0 for degree < 2
    std::optional<GaloisGroupTag> galois;
    std::optional<int> k; // |Gal|
    std::optional<int> aut_order;

    bool operator==(const BundleAnalysis&) const = default;
};

BundleAnalysis analyze(const IntMatrix& m);

// Candidate subgroup orders for targets of a given dimension.  Orders never
// contain 1: only nontrivial subgroups obstruct.
struct TargetProfile {
    int dimension = 0;
    std::set<int> candidate_orders;
    std::string assumptions;
    bool applicable = true;

    bool operator==(const TargetProfile&) const = default;
};

// dimension 2 -> {2}; dimension 3 with the all-real-roots assumption -> {3, 6};
// dimension 3 without it -> inapplicable (the target's automorphism group may
// be trivial, and order 1 divides everything).
TargetProfile target_profile(int dimension, bool assume_d_positive);

// True iff no candidate order divides k.  Requires k >= 2.
bool no_map_test(int k, const TargetProfile& profile);

enum class Verdict { robust, not_obstructed, inapplicable };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& s);

struct ObstructionReport {
    BundleAnalysis source;
    TargetProfile target;
    Verdict verdict = Verdict::inapplicable;
    std::vector<std::string> trace;

    bool operator==(const ObstructionReport&) const = default;
};

ObstructionReport robustness_report(const IntMatrix& m, int dimension, bool assume_d_positive);

// psi0(b,c) = [[-b,1,0],[-c,0,1],[-1,0,0]] with char x^3 + b x^2 + c x + 1.
IntMatrix cubic_family_matrix(const Int& b, const Int& c);

// The 4x4 companion-block family with char x^4 + 2a x^3 + (a^2+c^2) x^2 + 2c x + 1.
IntMatrix quartic_family_matrix(const Int& a, const Int& c);

struct CubicFamilyHit {
    Int b, c;
    BundleAnalysis analysis;
    bool operator==(const CubicFamilyHit&) const = default;
};

// Scans the cubic family over the grid, keeping members with irreducible
// characteristic polynomial and perfect-square discriminant.  Output is
// sorted by (b, c) regardless of jobs.
std::vector<CubicFamilyHit> scan_cubic_family(const Int& b_lo, const Int& b_hi, const Int& c_lo,
                                              const Int& c_hi, int jobs = 1);

struct QuarticFamilyAnalysis {
    Int a, c;
    BundleAnalysis analysis;
    IntPolynomial resolvent;
    bool resolvent_matches_family_form = false; // x[x^2-(a^2+c^2)x+4(ac-1)]
    IntPolynomial h;
    bool h_matches_family_form = false; // (x^2+1)(x^2+2ax+(a^2+c^2))
    bool generic = false;               // char irreducible
    std::string note;
};

QuarticFamilyAnalysis quartic_family(const Int& a, const Int& c);

// JSON wire forms; parse(print(x)) == x for each report type.
json analysis_json(const BundleAnalysis& a);
BundleAnalysis analysis_from_json(const json& j);
json target_profile_json(const TargetProfile& t);
TargetProfile target_profile_from_json(const json& j);
json report_json(const ObstructionReport& r);
ObstructionReport report_from_json(const json& j);
json quartic_family_json(const QuarticFamilyAnalysis& q);

} // namespace afinv
