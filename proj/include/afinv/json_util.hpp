#pragma once

#include <json.hpp>

#include "afinv/int_matrix.hpp"
#include "afinv/int_polynomial.hpp"
#include "afinv/numeric.hpp"

namespace afinv {

using nlohmann::json;

// Arbitrary-precision integers are emitted as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise; parsing accepts both.
inline json json_from_int(const Int& n) {
    if (n.fits_slong_p()) return json(static_cast<long>(n.get_si()));
    return json(n.get_str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

inline json json_from_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(json_from_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix as array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        std::vector<Int> r;
        for (const auto& e : row) r.push_back(int_from_json(e));
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw std::invalid_argument("matrix must be square");
    return IntMatrix::from_rows(rows);
}

// Coefficients lowest degree first.
inline json json_from_poly(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(json_from_int(c));
    return coeffs;
}

inline IntPolynomial poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected polynomial coefficient array");
    std::vector<Int> coeffs;
    for (const auto& e : j) coeffs.push_back(int_from_json(e));
    return IntPolynomial(std::move(coeffs));
}

} // namespace afinv
