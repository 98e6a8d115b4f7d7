#include "afinv/jacobi_perron.hpp"

#include <sstream>

#include "afinv/galois.hpp"
#include "afinv/unit_circle.hpp"

namespace afinv {

namespace {

// Kernel vector of a rank-(n-1) matrix over the field, free coordinate
// normalized to 1.
std::vector<NumberFieldElement> kernel_vector(std::vector<std::vector<NumberFieldElement>> g,
                                              const NumberFieldPtr& field) {
    const int n = static_cast<int>(g.size());
    std::vector<int> pivot_row_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (!g[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(g[rank], g[pr]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || g[r][col].is_zero()) continue;
            NumberFieldElement f = g[r][col] / g[rank][col];
            for (int c = 0; c < n; ++c) g[r][c] = g[r][c] - f * g[rank][c];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    if (rank != n - 1) throw std::logic_error("eigenvalue is not simple: kernel is not a line");
    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (pivot_row_of_col[col] < 0) { free_col = col; break; }
    std::vector<NumberFieldElement> v(n, NumberFieldElement::zero(field));
    v[free_col] = NumberFieldElement::one(field);
    for (int col = 0; col < n; ++col) {
        int pr = pivot_row_of_col[col];
        if (pr < 0) continue;
        v[col] = -(g[pr][free_col] / g[pr][col]);
    }
    return v;
}

std::vector<NumberFieldElement> apply_int_matrix(const IntMatrix& m,
                                                 const std::vector<NumberFieldElement>& v,
                                                 const NumberFieldPtr& field) {
    const int n = m.dim();
    std::vector<NumberFieldElement> out(n, NumberFieldElement::zero(field));
    for (int i = 0; i < n; ++i) {
        NumberFieldElement acc = NumberFieldElement::zero(field);
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) == 0) continue;
            acc = acc + Rational(m.at(i, j)) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

} // namespace

std::pair<IntMatrix, std::vector<NumberFieldElement>> positivize(
    const std::vector<NumberFieldElement>& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) throw std::invalid_argument("empty vector");
    std::vector<NumberFieldElement> w = v;
    std::vector<int> signs(n);
    IntMatrix s = IntMatrix::identity(n);
    const int budget = 10 * n * n;
    int ops = 0;

    auto recompute_signs = [&]() {
        for (int i = 0; i < n; ++i) {
            signs[i] = w[i].sign();
            if (signs[i] == 0)
                throw std::invalid_argument("positivize requires nonzero coordinates");
        }
    };
    recompute_signs();

    bool any_positive = false;
    for (int i = 0; i < n; ++i) any_positive |= (signs[i] > 0);
    if (!any_positive) {
        for (int i = 0; i < n; ++i) {
            w[i] = -w[i];
            signs[i] = -signs[i];
            for (int j = 0; j < n; ++j) s.at(i, j) = -s.at(i, j);
        }
    }

    while (true) {
        int j = -1;
        for (int i = n - 1; i >= 0; --i)
            if (signs[i] < 0) { j = i; break; }
        if (j < 0) break;
        // Largest-magnitude positive coordinate as the shear source.
        int k = -1;
        for (int i = 0; i < n; ++i) {
            if (signs[i] <= 0) continue;
            if (k < 0 || w[i].compare(w[k]) > 0) k = i;
        }
        if (k < 0) throw std::logic_error("no positive coordinate left to shear from");
        if (++ops > budget)
            throw std::runtime_error("positivization budget exceeded: coordinates may be rationally dependent");
        Int times = field_ceil(w[j].abs() / w[k]) + 1;
        w[j] = w[j] + Rational(times) * w[k];
        signs[j] = w[j].sign();
        if (signs[j] <= 0) throw std::logic_error("shear failed to make coordinate positive");
        for (int c = 0; c < n; ++c) s.at(j, c) += times * s.at(k, c);
    }
    return {s, w};
}

PFData pf_data(const IntMatrix& m) {
    if (m.dim() < 2) throw std::invalid_argument("monodromy must have dimension >= 2");
    if (m.dim() > 4) throw std::invalid_argument("analysis limited to dimensions 2..4");
    if (!m.is_unimodular()) throw std::invalid_argument("matrix is not unimodular");
    if (!is_hyperbolic(m)) throw std::invalid_argument("matrix is not hyperbolic");
    CirclePartition part = unit_circle_partition(char_poly(m));
    if (part.inside != 1 && part.outside != 1)
        throw std::invalid_argument("matrix is not tight: no unique circle-separated eigenvalue");
    if (!is_irreducible(char_poly(m)))
        throw std::invalid_argument("characteristic polynomial is reducible: outside the theory's hypotheses");

    PFData out;
    out.source = m;
    IntMatrix analyzed = m;
    if (part.inside != 1) {
        // Unique eigenvalue outside the circle: pass to the inverse, whose
        // contracting eigenvalue is unique.
        analyzed = m.inverse_unimodular();
        out.inverted = true;
    }

    // Unique real eigenvalue in (-1, 1).
    IntPolynomial cp = char_poly(analyzed);
    RealAlgebraicNumber c;
    {
        bool found = false;
        for (const RealAlgebraicNumber& r : real_roots(cp)) {
            if (r.compare(Rational(-1)) > 0 && r.compare(Rational(1)) < 0) {
                if (found) throw std::logic_error("contracting eigenvalue is not unique");
                c = r;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no real eigenvalue inside the unit interval");
    }

    if (c.sign() < 0) {
        // Orientation fix: square the matrix so 0 < c < 1.
        NumberFieldPtr f0 = NumberField::create(cp, c);
        NumberFieldElement csq =
            NumberFieldElement::generator(f0) * NumberFieldElement::generator(f0);
        analyzed = analyzed * analyzed;
        out.squared = true;
        c = to_algebraic(csq);
    }

    IntPolynomial minpoly = c.minpoly();
    if (!minpoly.is_monic()) throw std::logic_error("contracting eigenvalue is not an algebraic integer");
    NumberFieldPtr field = NumberField::create(minpoly, c);
    out.field = field;

    // Solve (analyzed - c I) v = 0 over Q(c).
    const int n = analyzed.dim();
    NumberFieldElement c_elem = field->degree() >= 2
                                    ? NumberFieldElement::generator(field)
                                    : NumberFieldElement::from_rational(field, c.rational_value());
    std::vector<std::vector<NumberFieldElement>> g(
        n, std::vector<NumberFieldElement>(n, NumberFieldElement::zero(field)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g[i][j] = NumberFieldElement::from_rational(field, Rational(analyzed.at(i, j)));
            if (i == j) g[i][j] = g[i][j] - c_elem;
        }
    std::vector<NumberFieldElement> v = kernel_vector(std::move(g), field);
    // Canonical representative: last coordinate +1.  The expansion depends on
    // the representative's signs; this choice realizes the stationary unit as
    // a power of 1/c on the widest class of inputs observed.
    NumberFieldElement scale = v.back().inverse();
    for (auto& x : v) x = x * scale;

    auto [s, w] = positivize(v);
    out.basis_change = s;
    out.matrix = s * analyzed * s.inverse_unimodular();
    out.eigenvector = std::move(w);
    out.contracting_eigenvalue = c;

    // Exact eigen identity in the positivized basis.
    std::vector<NumberFieldElement> lhs = apply_int_matrix(out.matrix, out.eigenvector, field);
    for (int i = 0; i < n; ++i)
        if (!(lhs[i] == c_elem * out.eigenvector[i]))
            throw std::logic_error("eigenvector identity failed after positivization");
    return out;
}

JPAStepResult jpa_step(const JPAState& s) {
    const size_t k = s.theta.size();
    if (k == 0) throw std::invalid_argument("empty state");
    for (const auto& t : s.theta) {
        int sg = t.sign();
        if (sg < 0) throw std::invalid_argument("state coordinates must be positive");
        if (sg == 0) throw DegenerateExpansion("state coordinate vanished: rational direction");
    }
    JPAStepResult out;
    out.digits.reserve(k);
    std::vector<NumberFieldElement> z;
    z.reserve(k);
    for (const auto& t : s.theta) {
        Int b = field_floor(t);
        out.digits.push_back(b);
        z.push_back(t - Rational(b));
    }
    if (z[0].is_zero())
        throw DegenerateExpansion("fractional part of the leading coordinate is zero");
    NumberFieldElement inv = z[0].inverse();
    out.next.theta.reserve(k);
    for (size_t j = 1; j < k; ++j) out.next.theta.push_back(z[j] * inv);
    out.next.theta.push_back(inv);
    return out;
}

IntMatrix digit_matrix(const std::vector<Int>& digits) {
    const int n = static_cast<int>(digits.size()) + 1;
    IntMatrix b(n);
    b.at(0, n - 1) = 1;
    for (int i = 1; i < n; ++i) {
        b.at(i, i - 1) = 1;
        b.at(i, n - 1) = digits[i - 1];
    }
    return b;
}

JPAExpansion jpa_expand(const JPAState& s0, int max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    JPAExpansion out;
    out.states.push_back(s0);
    for (int t = 0; t < max_steps; ++t) {
        JPAStepResult step;
        try {
            step = jpa_step(out.states.back());
        } catch (const DegenerateExpansion&) {
            out.degenerate = true;
            return out;
        }
        out.digits.push_back(step.digits);
        out.states.push_back(step.next);
        for (size_t i = 0; i + 1 < out.states.size(); ++i) {
            if (out.states[i] == out.states.back()) {
                out.preperiod = static_cast<int>(i);
                out.period = static_cast<int>(out.states.size()) - 1 - static_cast<int>(i);
                return out;
            }
        }
    }
    return out;
}

FundamentalAFAlgebra fundamental_af(const IntMatrix& m, int max_steps) {
    FundamentalAFAlgebra out;
    out.pf = pf_data(m);
    out.source = m;

    const auto& w = out.pf.eigenvector;
    NumberFieldElement inv0 = w[0].inverse();
    JPAState s0;
    for (size_t i = 1; i < w.size(); ++i) s0.theta.push_back(w[i] * inv0);

    out.expansion = jpa_expand(s0, max_steps);
    if (out.expansion.degenerate)
        throw std::logic_error("expansion degenerated on an irrational eigendirection");
    if (!out.expansion.period)
        throw PeriodBudgetExhausted("no period detected within the step budget", out.expansion,
                                    out.pf);

    const int pre = out.expansion.preperiod;
    const int per = *out.expansion.period;
    IntMatrix incidence = digit_matrix(out.expansion.digits[pre]);
    out.period_digits.push_back(out.expansion.digits[pre]);
    for (int t = pre + 1; t < pre + per; ++t) {
        incidence = incidence * digit_matrix(out.expansion.digits[t]);
        out.period_digits.push_back(out.expansion.digits[t]);
    }
    out.incidence = incidence;
    if (!incidence.entrywise_nonnegative())
        throw std::logic_error("incidence matrix has a negative entry");

    // Exact periodic eigen-collinearity check; the factor is the product of
    // the per-step proportionality constants.
    NumberFieldElement mu = collinearity_factor(out);
    out.pf_eigenvalue = to_algebraic(mu);
    return out;
}

NumberFieldElement collinearity_factor(const FundamentalAFAlgebra& af) {
    const NumberFieldPtr& field = af.pf.field;
    const int pre = af.expansion.preperiod;
    const int per = af.expansion.period.value();
    NumberFieldElement mu = NumberFieldElement::one(field);
    for (int t = pre + 1; t <= pre + per; ++t) mu = mu * af.expansion.states[t].theta.back();

    // incidence * (1, theta_pre) must equal mu * (1, theta_pre) exactly.
    std::vector<NumberFieldElement> vec;
    vec.push_back(NumberFieldElement::one(field));
    for (const auto& t : af.expansion.states[pre].theta) vec.push_back(t);
    std::vector<NumberFieldElement> lhs = apply_int_matrix(af.incidence, vec, field);
    for (size_t i = 0; i < vec.size(); ++i)
        if (!(lhs[i] == mu * vec[i]))
            throw std::logic_error("periodic eigen-collinearity identity failed");
    return mu;
}

Lemma6Report verify_lemma6(const IntMatrix& m, const FundamentalAFAlgebra& af, int max_exponent) {
    Lemma6Report rep;
    rep.char_incidence = char_poly(af.incidence);
    rep.char_source = char_poly(m);
    for (int pass = 0; pass < 2; ++pass) {
        IntMatrix base = (pass == 0) ? m : m.inverse_unimodular();
        IntMatrix p = base;
        for (int s = 1; s <= max_exponent; ++s) {
            if (char_poly(p) == rep.char_incidence) {
                rep.matched = true;
                rep.exponent = s;
                rep.via_inverse = (pass == 1);
                std::ostringstream os;
                os << "char(incidence) = char(" << (pass == 1 ? "inverse monodromy" : "monodromy")
                   << "^" << s << ")";
                if (af.pf.squared) os << "; analysis squared the matrix to orient the contraction";
                if (af.pf.inverted) os << "; analysis passed to the inverse";
                rep.note = os.str();
                return rep;
            }
            if (s < max_exponent) p = p * base;
        }
    }
    rep.note = "char(incidence) matches no small power of the monodromy or its inverse";
    return rep;
}

std::string bratteli_dot(const FundamentalAFAlgebra& af, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const int n = af.incidence.dim();
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n";
    for (int level = 0; level < depth; ++level) {
        os << "  { rank=same;";
        for (int i = 0; i < n; ++i) os << " v" << level << "_" << i << ";";
        os << " }\n";
    }
    for (int level = 0; level + 1 < depth; ++level)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
                const Int& mult = af.incidence.at(r, s);
                if (mult == 0) continue;
                os << "  v" << level << "_" << r << " -> v" << level + 1 << "_" << s;
                if (mult != 1) os << " [label=\"" << mult.get_str() << "\"]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

json bratteli_json(const FundamentalAFAlgebra& af, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const int n = af.incidence.dim();
    json edges = json::array();
    for (int level = 0; level + 1 < depth; ++level)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
                const Int& mult = af.incidence.at(r, s);
                if (mult == 0) continue;
                edges.push_back(json{{"level", level},
                                     {"from", r},
                                     {"to", s},
                                     {"multiplicity", json_from_int(mult)}});
            }
    return json{{"depth", depth},
                {"vertices_per_level", n},
                {"incidence", json_from_matrix(af.incidence)},
                {"edges", std::move(edges)}};
}

json expansion_json(const FundamentalAFAlgebra& af) {
    json digits = json::array();
    for (const auto& d : af.period_digits) {
        json row = json::array();
        for (const Int& x : d) row.push_back(json_from_int(x));
        digits.push_back(std::move(row));
    }
    return json{{"incidence", json_from_matrix(af.incidence)},
                {"period_digits", std::move(digits)},
                {"preperiod", af.expansion.preperiod},
                {"period", af.expansion.period.value()},
                {"squared", af.pf.squared}};
}

} // namespace afinv
