#pragma once

#include "cgc/convcode.hpp"
#include "cgc/statespace.hpp"

#include <json.hpp>

#include <string>

namespace cgc {

/// Key-ordered JSON tree; dumping it is deterministic byte for byte.
using Json = nlohmann::ordered_json;

// Canonical data encodings:
//   FieldSpec  {"p": 2, "m": 2, "modulus": [1, 1, 1]}  (modulus ascending)
//   Fq         integer when m = 1, list of m α-coefficients otherwise
//   Poly       list of Fq, ascending powers of z
//   RatFn      {"num": Poly, "den": Poly}
//   Matrix     list of rows

Json to_json(const FieldSpec& f);
Json to_json(const Fq& a);
Json to_json(const Poly& a);
Json to_json(const RatFn& a);
Json to_json(const Realization& r);
Json to_json(const CodeReport& r);

template <RingScalar T>
Json to_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <RingScalar T>
Json display_json(const Matrix<T>& m);

// Parsers. `key` is the path used in ParseError messages.

FieldSpec field_from_json(const Json& j, const std::string& key);
Fq fq_from_json(const Json& j, const FieldSpec& f, const std::string& key);
Poly poly_from_json(const Json& j, const FieldSpec& f, const std::string& key);
/// Accepts {"num", "den"} or a bare coefficient list (a polynomial).
RatFn ratfn_from_json(const Json& j, const FieldSpec& f, const std::string& key);
Matrix<RatFn> ratfn_matrix_from_json(const Json& j, const FieldSpec& f, const std::string& key);
Matrix<Fq> fq_matrix_from_json(const Json& j, const FieldSpec& f, std::size_t rows, std::size_t cols,
                               const std::string& key);
Realization realization_from_json(const Json& j, const FieldSpec& f, const std::string& key);

} // namespace cgc

#include "cgc/format.hpp"

namespace cgc {

template <RingScalar T>
Json display_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cgc
