#include "afinv/obstruction.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "afinv/real_algebraic.hpp"

namespace afinv {

BundleAnalysis analyze(const IntMatrix& m) {
    BundleAnalysis out;
    out.matrix = m;
    out.char_polynomial = char_poly(m);
    out.unimodular = m.is_unimodular();

    // Eigenvalues at zero (singular input) are inside the circle; split them
    // off so the partition is total on any square matrix.
    IntPolynomial p = out.char_polynomial;
    int zero_roots = 0;
    while (!p.is_zero() && p.coeff(0) == 0 && p.degree() > 0) {
        p = p.divide_exact(IntPolynomial{Int(0), Int(1)});
        ++zero_roots;
    }
    if (p.degree() > 0)
        out.partition = unit_circle_partition(p);
    out.partition.inside += zero_roots;

    out.hyperbolic = out.unimodular && out.partition.on == 0;
    out.tight = out.hyperbolic && (out.partition.inside == 1 || out.partition.outside == 1);

    const int deg = out.char_polynomial.degree();
    if (deg >= 2) out.discriminant = discriminant(out.char_polynomial);
    if (deg <= 4) out.irreducible = is_irreducible(out.char_polynomial);
    if (out.irreducible == true && deg >= 2 && deg <= 4) {
        out.galois = galois_group(out.char_polynomial);
        out.k = out.galois->order;
        if (count_real_roots(out.char_polynomial) > 0)
            out.aut_order = aut_order_of_pf_field(out.char_polynomial);
    }
    return out;
}

TargetProfile target_profile(int dimension, bool assume_d_positive) {
    TargetProfile t;
    t.dimension = dimension;
    if (dimension == 2) {
        t.candidate_orders = {2};
        t.assumptions = "none";
        return t;
    }
    if (dimension == 3) {
        if (assume_d_positive) {
            t.candidate_orders = {3, 6};
            t.assumptions = "D>0";
            return t;
        }
        t.applicable = false;
        t.assumptions = "none: without D>0 the eigenvalue field of the target may have a "
                        "trivial automorphism group, and order 1 divides every k";
        return t;
    }
    throw std::invalid_argument("target profiles are defined for dimensions 2 and 3 only");
}

bool no_map_test(int k, const TargetProfile& profile) {
    if (k < 2) throw std::invalid_argument("group order must be >= 2");
    for (int t : profile.candidate_orders)
        if (k % t == 0) return false;
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::robust: return "robust";
        case Verdict::not_obstructed: return "not_obstructed";
        case Verdict::inapplicable: return "inapplicable";
    }
    throw std::logic_error("unknown verdict");
}

std::optional<Verdict> parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::robust, Verdict::not_obstructed, Verdict::inapplicable})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

ObstructionReport robustness_report(const IntMatrix& m, int dimension, bool assume_d_positive) {
    ObstructionReport rep;
    rep.source = analyze(m);
    rep.target = target_profile(dimension, assume_d_positive);

    if (!rep.target.applicable) {
        rep.verdict = Verdict::inapplicable;
        rep.trace.push_back("target profile inapplicable: " + rep.target.assumptions);
        return rep;
    }
    if (rep.source.irreducible == false) {
        rep.verdict = Verdict::inapplicable;
        rep.trace.push_back("characteristic polynomial is reducible: no Galois data");
        return rep;
    }
    if (!rep.source.k) {
        rep.verdict = Verdict::inapplicable;
        rep.trace.push_back("no Galois data (degree outside 2..4)");
        return rep;
    }
    if (!rep.source.tight) {
        rep.verdict = Verdict::inapplicable;
        rep.trace.push_back(rep.source.hyperbolic
                                ? "matrix is not tight: the stationary incidence matrix need "
                                  "not be similar to the monodromy"
                                : "matrix is not hyperbolic");
        return rep;
    }

    const int k = *rep.source.k;
    bool all_fail = true;
    for (int t : rep.target.candidate_orders) {
        std::ostringstream os;
        if (k % t == 0) {
            os << "t'=" << t << " divides k=" << k;
            all_fail = false;
        } else {
            os << "t'=" << t << " does not divide k=" << k;
        }
        rep.trace.push_back(os.str());
    }

    if (dimension >= m.dim()) {
        rep.verdict = Verdict::robust;
        rep.trace.push_back("target dimension is not smaller than the bundle dimension: "
                            "robustness holds vacuously");
        return rep;
    }
    rep.verdict = all_fail ? Verdict::robust : Verdict::not_obstructed;
    rep.trace.push_back(all_fail
                            ? "no candidate order divides k: no continuous map to any such target"
                            : "a candidate order divides k: the divisibility test does not obstruct");
    return rep;
}

IntMatrix cubic_family_matrix(const Int& b, const Int& c) {
    return IntMatrix::from_rows({{-b, Int(1), Int(0)}, {-c, Int(0), Int(1)}, {Int(-1), Int(0), Int(0)}});
}

IntMatrix quartic_family_matrix(const Int& a, const Int& c) {
    return IntMatrix::from_rows({{-2 * a, Int(1), Int(0), Int(0)},
                                 {-(a * a + c * c), Int(0), Int(1), Int(0)},
                                 {-2 * c, Int(0), Int(0), Int(1)},
                                 {Int(-1), Int(0), Int(0), Int(0)}});
}

std::vector<CubicFamilyHit> scan_cubic_family(const Int& b_lo, const Int& b_hi, const Int& c_lo,
                                              const Int& c_hi, int jobs) {
    std::vector<std::pair<Int, Int>> grid;
    for (Int b = b_lo; b <= b_hi; ++b)
        for (Int c = c_lo; c <= c_hi; ++c) grid.emplace_back(b, c);

    std::vector<std::optional<CubicFamilyHit>> slots(grid.size());
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const auto& [b, c] = grid[i];
            BundleAnalysis a = analyze(cubic_family_matrix(b, c));
            if (a.irreducible == true && is_perfect_square(a.discriminant))
                slots[i] = CubicFamilyHit{b, c, std::move(a)};
        }
    };
    if (jobs <= 1 || grid.size() < 2) {
        work(0, grid.size());
    } else {
        size_t n_threads = std::min<size_t>(jobs, grid.size());
        std::vector<std::thread> pool;
        size_t chunk = (grid.size() + n_threads - 1) / n_threads;
        for (size_t t = 0; t < n_threads; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(grid.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    std::vector<CubicFamilyHit> hits;
    for (auto& s : slots)
        if (s) hits.push_back(std::move(*s));
    // grid order is already (b, c) lexicographic
    return hits;
}

QuarticFamilyAnalysis quartic_family(const Int& a, const Int& c) {
    QuarticFamilyAnalysis out;
    out.a = a;
    out.c = c;
    IntMatrix m = quartic_family_matrix(a, c);
    out.analysis = analyze(m);

    out.resolvent = resolvent_cubic(out.analysis.char_polynomial);
    const Int s = a * a + c * c;
    IntPolynomial x{Int(0), Int(1)};
    IntPolynomial expected_resolvent = x * IntPolynomial{4 * (a * c - 1), -s, Int(1)};
    out.resolvent_matches_family_form = (out.resolvent == expected_resolvent);

    // h from the general construction with the family's rational root t = 0:
    // (x^2 - t x + d)(x^2 + A x + (B - t)) for char x^4 + A x^3 + B x^2 + ...
    const Int A = out.analysis.char_polynomial.coeff(3);
    const Int B = out.analysis.char_polynomial.coeff(2);
    const Int d = out.analysis.char_polynomial.coeff(0);
    bool t_zero_is_root = (out.resolvent.coeff(0) == 0);
    out.h = IntPolynomial{d, Int(0), Int(1)} * IntPolynomial{B, A, Int(1)};
    IntPolynomial expected_h = IntPolynomial{Int(1), Int(0), Int(1)} * IntPolynomial{s, 2 * a, Int(1)};
    out.h_matches_family_form = t_zero_is_root && (out.h == expected_h);

    out.generic = (out.analysis.irreducible == true);
    std::ostringstream note;
    if (!out.generic) note << "non-generic member: characteristic polynomial is reducible";
    if (!out.analysis.tight) {
        if (note.tellp() > 0) note << "; ";
        note << "not tight: char = (x^2+ax)^2 + (cx+1)^2 has no real roots, so no real "
                "contracting eigenvalue exists; the tightness hypothesis of the quartic "
                "obstruction route fails for this family";
    }
    out.note = note.str();
    return out;
}

namespace {

json partition_json(const CirclePartition& p) {
    return json{{"inside", p.inside}, {"on", p.on}, {"outside", p.outside}};
}

CirclePartition partition_from_json(const json& j) {
    CirclePartition p;
    p.inside = j.at("inside").get<int>();
    p.on = j.at("on").get<int>();
    p.outside = j.at("outside").get<int>();
    return p;
}

} // namespace

json analysis_json(const BundleAnalysis& a) {
    json flags{{"unimodular", a.unimodular},
               {"hyperbolic", a.hyperbolic},
               {"tight", a.tight},
               {"irreducible", a.irreducible ? json(*a.irreducible) : json(nullptr)}};
    return json{{"matrix", json_from_matrix(a.matrix)},
                {"char", json_from_poly(a.char_polynomial)},
                {"char_pretty", a.char_polynomial.str()},
                {"flags", std::move(flags)},
                {"partition", partition_json(a.partition)},
                {"discriminant", json_from_int(a.discriminant)},
                {"galois", a.galois ? json(to_string(a.galois->tag)) : json(nullptr)},
                {"k", a.k ? json(*a.k) : json(nullptr)},
                {"aut_order", a.aut_order ? json(*a.aut_order) : json(nullptr)}};
}

BundleAnalysis analysis_from_json(const json& j) {
    BundleAnalysis a;
    a.matrix = matrix_from_json(j.at("matrix"));
    a.char_polynomial = poly_from_json(j.at("char"));
    const json& flags = j.at("flags");
    a.unimodular = flags.at("unimodular").get<bool>();
    a.hyperbolic = flags.at("hyperbolic").get<bool>();
    a.tight = flags.at("tight").get<bool>();
    if (!flags.at("irreducible").is_null()) a.irreducible = flags.at("irreducible").get<bool>();
    a.partition = partition_from_json(j.at("partition"));
    a.discriminant = int_from_json(j.at("discriminant"));
    if (!j.at("galois").is_null()) {
        auto tag = parse_galois_tag(j.at("galois").get<std::string>());
        if (!tag) throw std::invalid_argument("unknown galois tag");
        a.galois = make_group_tag(*tag);
    }
    if (!j.at("k").is_null()) a.k = j.at("k").get<int>();
    if (!j.at("aut_order").is_null()) a.aut_order = j.at("aut_order").get<int>();
    return a;
}

json target_profile_json(const TargetProfile& t) {
    return json{{"dimension", t.dimension},
                {"candidate_orders", t.candidate_orders},
                {"assumptions", t.assumptions},
                {"applicable", t.applicable}};
}

TargetProfile target_profile_from_json(const json& j) {
    TargetProfile t;
    t.dimension = j.at("dimension").get<int>();
    t.candidate_orders = j.at("candidate_orders").get<std::set<int>>();
    t.assumptions = j.at("assumptions").get<std::string>();
    t.applicable = j.at("applicable").get<bool>();
    return t;
}

json report_json(const ObstructionReport& r) {
    json j = analysis_json(r.source);
    j["target"] = target_profile_json(r.target);
    j["verdict"] = to_string(r.verdict);
    j["trace"] = r.trace;
    return j;
}

ObstructionReport report_from_json(const json& j) {
    ObstructionReport r;
    r.source = analysis_from_json(j);
    r.target = target_profile_from_json(j.at("target"));
    auto v = parse_verdict(j.at("verdict").get<std::string>());
    if (!v) throw std::invalid_argument("unknown verdict");
    r.verdict = *v;
    r.trace = j.at("trace").get<std::vector<std::string>>();
    return r;
}

json quartic_family_json(const QuarticFamilyAnalysis& q) {
    json j = analysis_json(q.analysis);
    j["family"] = json{{"a", json_from_int(q.a)},
                       {"c", json_from_int(q.c)},
                       {"resolvent", json_from_poly(q.resolvent)},
                       {"resolvent_matches_family_form", q.resolvent_matches_family_form},
                       {"h", json_from_poly(q.h)},
                       {"h_matches_family_form", q.h_matches_family_form},
                       {"generic", q.generic},
                       {"note", q.note}};
    return j;
}

} // namespace afinv
