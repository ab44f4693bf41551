#include "cgc/io.hpp"

namespace cgc {

namespace {

const Json& require_key(const Json& j, const char* name, const std::string& key) {
    if (!j.is_object()) throw ParseError(key, "expected an object");
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(key + "." + name, "missing key");
    return *it;
}

int require_int(const Json& j, const std::string& key) {
    if (!j.is_number_integer()) throw ParseError(key, "expected an integer");
    return j.get<int>();
}

const Json& require_array(const Json& j, const std::string& key) {
    if (!j.is_array()) throw ParseError(key, "expected a list");
    return j;
}

std::string at(const std::string& key, std::size_t i) { return key + "[" + std::to_string(i) + "]"; }

} // namespace

Json to_json(const FieldSpec& f) {
    Json j;
    j["p"] = f.p();
    j["m"] = f.m();
    if (f.m() > 1) j["modulus"] = f.modulus();
    return j;
}

Json to_json(const Fq& a) {
    if (a.field().m() == 1) return Json(a.code());
    return Json(a.coeffs());
}

Json to_json(const Poly& a) {
    Json j = Json::array();
    for (int i = 0; i <= a.degree(); ++i) j.push_back(to_json(a.coefficient(i)));
    return j;
}

Json to_json(const RatFn& a) {
    Json j;
    j["num"] = to_json(a.num());
    j["den"] = to_json(a.den());
    return j;
}

Json to_json(const Realization& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["A"] = to_json(r.A);
    j["B"] = to_json(r.B);
    j["C"] = to_json(r.C);
    j["D"] = to_json(r.D);
    return j;
}

Json to_json(const CodeReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["dFree"] = r.d_free;
    j["singletonBound"] = r.singleton_bound;
    j["isMds"] = r.is_mds;
    j["inputWasCatastrophic"] = r.input_was_catastrophic;
    return j;
}

FieldSpec field_from_json(const Json& j, const std::string& key) {
    const int p = require_int(require_key(j, "p", key), key + ".p");
    int m = 1;
    if (j.contains("m")) m = require_int(j["m"], key + ".m");
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) {
        const Json& mj = require_array(j["modulus"], key + ".modulus");
        std::vector<int> coeffs;
        for (std::size_t i = 0; i < mj.size(); ++i) coeffs.push_back(require_int(mj[i], at(key + ".modulus", i)));
        modulus = std::move(coeffs);
    }
    return FieldSpec::make(p, m, std::move(modulus));
}

Fq fq_from_json(const Json& j, const FieldSpec& f, const std::string& key) {
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0 || v >= f.p()) throw ParseError(key, "integer " + std::to_string(v) + " not in [0, p)");
        return f.from_int(v);
    }
    if (j.is_array()) {
        if (static_cast<int>(j.size()) > f.m()) throw ParseError(key, "more than m coefficients");
        std::vector<int> c;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const int v = require_int(j[i], at(key, i));
            if (v < 0 || v >= f.p()) throw ParseError(at(key, i), "coefficient not in [0, p)");
            c.push_back(v);
        }
        return f.from_coeffs(c);
    }
    throw ParseError(key, "expected a field element (integer or coefficient list)");
}

Poly poly_from_json(const Json& j, const FieldSpec& f, const std::string& key) {
    require_array(j, key);
    std::vector<Fq> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(fq_from_json(j[i], f, at(key, i)));
    return Poly::from_coeffs(f, c);
}

RatFn ratfn_from_json(const Json& j, const FieldSpec& f, const std::string& key) {
    if (j.is_array()) return RatFn(poly_from_json(j, f, key));
    if (!j.is_object()) throw ParseError(key, "expected {num, den} or a coefficient list");
    Poly num = poly_from_json(require_key(j, "num", key), f, key + ".num");
    Poly den = j.contains("den") ? poly_from_json(j["den"], f, key + ".den") : Poly(f.one());
    if (den.is_zero()) throw ParseError(key + ".den", "zero denominator");
    return RatFn(std::move(num), std::move(den));
}

Matrix<RatFn> ratfn_matrix_from_json(const Json& j, const FieldSpec& f, const std::string& key) {
    require_array(j, key);
    std::vector<std::vector<RatFn>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = require_array(j[i], at(key, i));
        std::vector<RatFn> r;
        for (std::size_t c = 0; c < row.size(); ++c) r.push_back(ratfn_from_json(row[c], f, at(at(key, i), c)));
        if (!rows.empty() && r.size() != rows.front().size()) throw ParseError(at(key, i), "ragged matrix");
        rows.push_back(std::move(r));
    }
    return Matrix<RatFn>::from_rows(rows, RatFn::zero(f));
}

Matrix<Fq> fq_matrix_from_json(const Json& j, const FieldSpec& f, std::size_t rows, std::size_t cols,
                               const std::string& key) {
    require_array(j, key);
    if (j.size() != rows) throw ParseError(key, "expected " + std::to_string(rows) + " rows");
    Matrix<Fq> out(rows, cols, f.zero());
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = require_array(j[i], at(key, i));
        if (row.size() != cols) throw ParseError(at(key, i), "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) out(i, c) = fq_from_json(row[c], f, at(at(key, i), c));
    }
    return out;
}

Realization realization_from_json(const Json& j, const FieldSpec& f, const std::string& key) {
    const int n = require_int(require_key(j, "n", key), key + ".n");
    const int k = require_int(require_key(j, "k", key), key + ".k");
    const int delta = require_int(require_key(j, "delta", key), key + ".delta");
    if (n < 1 || k < 1 || delta < 0) throw ParseError(key, "invalid (n, k, delta)");
    return make_realization(fq_matrix_from_json(require_key(j, "A", key), f, delta, delta, key + ".A"),
                            fq_matrix_from_json(require_key(j, "B", key), f, k, delta, key + ".B"),
                            fq_matrix_from_json(require_key(j, "C", key), f, delta, n, key + ".C"),
                            fq_matrix_from_json(require_key(j, "D", key), f, k, n, key + ".D"));
}

} // namespace cgc
