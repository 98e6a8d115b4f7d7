#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "afinv/int_matrix.hpp"
#include "afinv/json_util.hpp"
#include "afinv/number_field.hpp"
#include "afinv/real_algebraic.hpp"

namespace afinv {

// Contracting eigendata of a tight hyperbolic unimodular matrix, written in
// a basis where the eigenvector is strictly positive.  `matrix` is the
// analyzed monodromy (inverted when the unique circle-separated eigenvalue
// sat outside, squared when the contracting eigenvalue was negative)
// conjugated by the positivizing unimodular change of basis, so that
// matrix * eigenvector = c * eigenvector holds exactly.
struct PFData {
    IntMatrix matrix{1};
    RealAlgebraicNumber contracting_eigenvalue;
    std::vector<NumberFieldElement> eigenvector;
    bool squared = false;
    bool inverted = false;
    IntMatrix source{1};
    IntMatrix basis_change{1}; // the positivizing S
    NumberFieldPtr field;      // Q(c)
};

PFData pf_data(const IntMatrix& m);

// Unimodular S with S*v entrywise positive in the real embedding, by greedy
// shears.  Coordinates of v must be nonzero (guaranteed for eigenvectors of
// matrices with irreducible characteristic polynomial).
std::pair<IntMatrix, std::vector<NumberFieldElement>> positivize(
    const std::vector<NumberFieldElement>& v);

struct JPAState {
    std::vector<NumberFieldElement> theta; // length m-1, entrywise > 0
    bool operator==(const JPAState& other) const { return theta == other.theta; }
};

// Raised when an expansion hits a rational direction (fractional part of the
// leading coordinate vanishes exactly).
struct DegenerateExpansion : std::runtime_error {
    explicit DegenerateExpansion(const std::string& what) : std::runtime_error(what) {}
};

struct JPAStepResult {
    std::vector<Int> digits; // floor of each coordinate, >= 0
    JPAState next;
};

// One classical Jacobi-Perron step: digits b = floor(theta), fractional
// parts z = theta - b, next state (z_2/z_1, ..., z_{m-1}/z_1, 1/z_1).
JPAStepResult jpa_step(const JPAState& s);

// The digit matrix ((0,1),(I,b)): first row (0,...,0,1), then the identity
// block alongside the digit column.
IntMatrix digit_matrix(const std::vector<Int>& digits);

struct JPAExpansion {
    std::vector<std::vector<Int>> digits; // digits[t] maps states[t] -> states[t+1]
    int preperiod = 0;
    std::optional<int> period;
    std::vector<JPAState> states;
    bool degenerate = false;
};

// Iterates jpa_step with exact state recording; the first exactly repeated
// state fixes preperiod and period.  A rational direction ends the expansion
// with the degenerate flag set.
JPAExpansion jpa_expand(const JPAState& s0, int max_steps);

struct FundamentalAFAlgebra {
    IntMatrix incidence{1};
    std::vector<std::vector<Int>> period_digits;
    RealAlgebraicNumber pf_eigenvalue;
    IntMatrix source{1};
    JPAExpansion expansion;
    PFData pf;
};

// Raised when no period is detected within the step budget; carries the
// partial expansion for reporting.
struct PeriodBudgetExhausted : std::runtime_error {
    PeriodBudgetExhausted(const std::string& what, JPAExpansion partial_expansion, PFData pf_data)
        : std::runtime_error(what), partial(std::move(partial_expansion)), pf(std::move(pf_data)) {}
    JPAExpansion partial;
    PFData pf;
};

inline constexpr int kDefaultMaxSteps = 256;

// Expands the positivized contracting eigendirection of m and multiplies the
// digit matrices over one period into the stationary incidence matrix.
FundamentalAFAlgebra fundamental_af(const IntMatrix& m, int max_steps = kDefaultMaxSteps);

struct Lemma6Report {
    bool matched = false;
    int exponent = 0;     // char(incidence) == char(base^exponent)
    bool via_inverse = false;
    IntPolynomial char_incidence;
    IntPolynomial char_source;
    std::string note;
};

// Compares the incidence matrix's characteristic polynomial against powers
// of the source monodromy (and of its inverse when the analysis inverted),
// reporting only what was actually computed.
Lemma6Report verify_lemma6(const IntMatrix& m, const FundamentalAFAlgebra& af, int max_exponent = 8);

// Stationary Bratteli diagram, unrolled to `depth` levels.
std::string bratteli_dot(const FundamentalAFAlgebra& af, int depth);
json bratteli_json(const FundamentalAFAlgebra& af, int depth);

// Wire schema: { "incidence", "period_digits", "preperiod", "period", "squared" }.
json expansion_json(const FundamentalAFAlgebra& af);

// Collinearity factor: incidence * (1, theta)^T = mu * (1, theta)^T at the
// period start; mu > 1.
NumberFieldElement collinearity_factor(const FundamentalAFAlgebra& af);

} // namespace afinv
