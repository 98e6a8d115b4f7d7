#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "afinv/obstruction.hpp"
#include "afinv/similarity.hpp"

using namespace afinv;

namespace {

IntPolynomial poly(std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

IntMatrix mat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Int>> r;
    for (auto& row : rows) {
        std::vector<Int> rr;
        for (long x : row) rr.emplace_back(x);
        r.push_back(std::move(rr));
    }
    return IntMatrix::from_rows(r);
}

IntMatrix companion(const IntPolynomial& p) {
    const int n = p.degree();
    IntMatrix c(n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
    return c;
}

} // namespace

TEST_CASE("analyze the first cubic example matrix") {
    BundleAnalysis a = analyze(mat({{0, 1, 0}, {3, 0, 1}, {-1, 0, 0}}));
    CHECK(a.unimodular);
    CHECK(a.hyperbolic);
    CHECK(a.tight);
    CHECK(a.irreducible == true);
    CHECK(a.discriminant == 81);
    REQUIRE(a.galois.has_value());
    CHECK(a.galois->tag == GaloisTag::C3);
    CHECK(a.k == 3);
    CHECK(a.aut_order == 3);
    CHECK(a.char_polynomial == poly({1, -3, 0, 1}));
}

TEST_CASE("analyze the trace-3 example matrix") {
    BundleAnalysis a = analyze(mat({{3, 1, 0}, {0, 0, 1}, {-1, 0, 0}}));
    CHECK(a.char_polynomial == poly({1, 0, -3, 1})); // x^3 - 3x^2 + 1
    CHECK(a.discriminant == 81);
    REQUIRE(a.galois.has_value());
    CHECK(a.galois->tag == GaloisTag::C3);
    CHECK(a.tight);
}

TEST_CASE("analyze records hypothesis failures instead of throwing") {
    // non-generic quartic family member: char has root -1
    BundleAnalysis a = analyze(quartic_family_matrix(Int(1), Int(1)));
    CHECK(a.irreducible == false);
    CHECK_FALSE(a.galois.has_value());
    CHECK_FALSE(a.k.has_value());

    // non-unimodular
    BundleAnalysis b = analyze(mat({{2, 0}, {0, 3}}));
    CHECK_FALSE(b.unimodular);
    CHECK_FALSE(b.hyperbolic);

    // singular matrix: zero eigenvalues counted inside
    BundleAnalysis c = analyze(mat({{1, 0}, {0, 0}}));
    CHECK(c.partition == CirclePartition{1, 1, 0});
}

TEST_CASE("divisibility test") {
    CHECK(no_map_test(3, target_profile(2, false)));
    CHECK(no_map_test(8, target_profile(3, true)));
    CHECK_FALSE(no_map_test(6, target_profile(2, false)));
    CHECK_FALSE(no_map_test(12, target_profile(3, true)));
    CHECK_THROWS(no_map_test(1, target_profile(2, false)));
    // a group's own order always divides k
    for (int k : {2, 3, 4, 6, 8, 12, 24}) {
        TargetProfile p;
        p.dimension = 2;
        p.candidate_orders = {k};
        CHECK_FALSE(no_map_test(k, p));
    }
}

TEST_CASE("target profiles") {
    TargetProfile t2 = target_profile(2, false);
    CHECK(t2.candidate_orders == std::set<int>{2});
    CHECK(t2.applicable);
    TargetProfile t3 = target_profile(3, true);
    CHECK(t3.candidate_orders == std::set<int>{3, 6});
    CHECK(t3.applicable);
    TargetProfile t3n = target_profile(3, false);
    CHECK_FALSE(t3n.applicable);
    CHECK_THROWS(target_profile(4, true));
    CHECK(t2.candidate_orders.count(1) == 0);
    CHECK(t3.candidate_orders.count(1) == 0);
}

TEST_CASE("robustness reports") {
    // Example 1 matrix vs dimension-2 targets: robust since 2 does not divide 3
    ObstructionReport r1 = robustness_report(mat({{0, 1, 0}, {3, 0, 1}, {-1, 0, 0}}), 2, false);
    CHECK(r1.verdict == Verdict::robust);

    // D4 quartic vs dimension-3 targets with D>0: k=8, orders {3,6}.  The
    // divisibility facts hold (3 and 6 do not divide 8), but the palindromic
    // characteristic polynomial forces a conjugate pair exactly on the unit
    // circle, so the matrix is not tight and the verdict is inapplicable.
    ObstructionReport r2 = robustness_report(companion(poly({1, -1, -1, -1, 1})), 3, true);
    CHECK(r2.source.k == 8);
    CHECK(r2.source.galois->tag == GaloisTag::D4);
    CHECK_FALSE(r2.source.hyperbolic);
    CHECK_FALSE(r2.source.tight);
    CHECK(r2.source.partition == CirclePartition{1, 2, 1});
    CHECK(no_map_test(*r2.source.k, r2.target));
    CHECK(r2.verdict == Verdict::inapplicable);

    // 2x2 vs dimension 2: vacuously robust, noted in the trace
    ObstructionReport r3 = robustness_report(mat({{1, 1}, {1, 0}}), 2, false);
    CHECK(r3.verdict == Verdict::robust);
    bool vacuous_note = false;
    for (const auto& line : r3.trace) vacuous_note |= line.find("vacuous") != std::string::npos;
    CHECK(vacuous_note);

    // S3 cubic vs dimension 2: 2 | 6, not obstructed
    ObstructionReport r4 = robustness_report(companion(poly({-1, -1, 0, 1})), 2, false);
    CHECK(r4.source.k == 6);
    CHECK(r4.verdict == Verdict::not_obstructed);

    // dimension 3 without the D>0 assumption: inapplicable
    ObstructionReport r5 = robustness_report(companion(poly({1, -1, -1, -1, 1})), 3, false);
    CHECK(r5.verdict == Verdict::inapplicable);

    // non-tight quartic family member: inapplicable
    ObstructionReport r6 = robustness_report(quartic_family_matrix(Int(1), Int(2)), 2, false);
    CHECK(r6.verdict == Verdict::inapplicable);

    // reducible member: inapplicable
    ObstructionReport r7 = robustness_report(quartic_family_matrix(Int(1), Int(1)), 2, false);
    CHECK(r7.verdict == Verdict::inapplicable);
}

TEST_CASE("robust verdicts are monotone under shrinking candidate orders") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> order(2, 9);
    for (int trial = 0; trial < 50; ++trial) {
        TargetProfile big;
        big.dimension = 2;
        for (int i = 0; i < 4; ++i) big.candidate_orders.insert(order(rng));
        TargetProfile small = big;
        small.candidate_orders.erase(small.candidate_orders.begin());
        for (int k : {2, 3, 4, 6, 8, 12, 24}) {
            if (no_map_test(k, big)) CHECK(no_map_test(k, small));
        }
    }
}

TEST_CASE("cubic family scan over the paper grid") {
    auto hits = scan_cubic_family(Int(-3), Int(3), Int(-3), Int(3));
    REQUIRE(hits.size() == 4);
    CHECK(hits[0].b == -3);
    CHECK(hits[0].c == 0);
    CHECK(hits[1].b == -2);
    CHECK(hits[1].c == -1);
    CHECK(hits[2].b == -1);
    CHECK(hits[2].c == -2);
    CHECK(hits[3].b == 0);
    CHECK(hits[3].c == -3);
    std::vector<long> expected_disc = {81, 49, 49, 81};
    for (size_t i = 0; i < hits.size(); ++i) {
        CHECK(hits[i].analysis.discriminant == expected_disc[i]);
        CHECK(hits[i].analysis.galois->tag == GaloisTag::C3);
        CHECK(hits[i].analysis.tight);
        // traces 0..3 reading from b = -trace
        CHECK(hits[i].analysis.matrix.trace() == -hits[i].b);
    }
    // pairwise distinct up to rational similarity
    for (size_t i = 0; i < hits.size(); ++i)
        for (size_t j = i + 1; j < hits.size(); ++j)
            CHECK_FALSE(similar_over_rationals(hits[i].analysis.matrix, hits[j].analysis.matrix));

    // scan output is independent of the worker count
    auto hits3 = scan_cubic_family(Int(-3), Int(3), Int(-3), Int(3), 3);
    CHECK(hits == hits3);

    CHECK(scan_cubic_family(Int(2), Int(1), Int(0), Int(0)).empty());
}

TEST_CASE("quartic family analyses") {
    QuarticFamilyAnalysis q12 = quartic_family(Int(1), Int(2));
    CHECK(q12.analysis.char_polynomial == poly({1, 4, 5, 2, 1}));
    CHECK(q12.generic);
    CHECK(q12.resolvent_matches_family_form);
    CHECK(q12.resolvent == poly({0, 1}) * poly({4, -5, 1})); // x (x-1)(x-4)
    CHECK(q12.h_matches_family_form);
    CHECK_FALSE(q12.analysis.tight);

    QuarticFamilyAnalysis q11 = quartic_family(Int(1), Int(1));
    CHECK_FALSE(q11.generic);
    CHECK(q11.note.find("non-generic") != std::string::npos);

    for (long a = 0; a <= 3; ++a)
        for (long c = 0; c <= 3; ++c) {
            QuarticFamilyAnalysis q = quartic_family(Int(a), Int(c));
            CHECK(q.resolvent_matches_family_form);
            CHECK(q.h_matches_family_form);
            CHECK_FALSE(q.analysis.tight);
        }
}

TEST_CASE("json round trips") {
    BundleAnalysis a = analyze(mat({{0, 1, 0}, {3, 0, 1}, {-1, 0, 0}}));
    CHECK(analysis_from_json(analysis_json(a)) == a);

    BundleAnalysis partial = analyze(mat({{2, 0}, {0, 3}}));
    CHECK(analysis_from_json(analysis_json(partial)) == partial);

    for (auto [dim, flag] : std::vector<std::pair<int, bool>>{{2, false}, {3, true}, {3, false}}) {
        ObstructionReport r = robustness_report(mat({{0, 1, 0}, {3, 0, 1}, {-1, 0, 0}}), dim, flag);
        CHECK(report_from_json(report_json(r)) == r);
    }
    TargetProfile t = target_profile(3, true);
    CHECK(target_profile_from_json(target_profile_json(t)) == t);

    // big integers survive the wire format
    IntMatrix big(2);
    big.at(0, 0) = Int("123456789012345678901234567890");
    big.at(1, 1) = 1;
    CHECK(matrix_from_json(json_from_matrix(big)) == big);
}
