#include "cgc/goppa_p1.hpp"

#include <string>

namespace cgc {

void validate(const P1Spec& spec) {
    const int n = spec.n();
    if (spec.s < 0 || spec.s > spec.r || spec.r >= n)
        throw Error(ErrorKind::InvalidSpec, "need 0 <= s <= r < n, got s=" + std::to_string(spec.s) +
                                                " r=" + std::to_string(spec.r) + " n=" + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        require_same_field(spec.field, spec.alphas[i].field());
        if (spec.alphas[i].is_zero())
            throw Error(ErrorKind::DegeneratePoints, "point " + std::to_string(i + 1) + " is the origin");
        for (int j = 0; j < i; ++j)
            if (spec.alphas[i] == spec.alphas[j])
                throw Error(ErrorKind::DuplicatePoints,
                            "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
}

std::vector<RatFn> standard_points(const Fq& a, const Fq& b, int n) {
    const FieldSpec& f = a.field();
    require_same_field(f, b.field());
    if (a.is_zero() || b.is_zero() || a == b)
        throw Error(ErrorKind::DegeneratePoints, "a and b must be distinct and nonzero");
    if (n < 1 || static_cast<long long>(n) >= f.q())
        throw Error(ErrorKind::DegeneratePoints, "need 1 <= n < q, got n=" + std::to_string(n));

    std::vector<RatFn> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Fq ai = a.pow(i);
        const Fq bi = b.pow(i);
        out.emplace_back(Poly::from_coeffs(f, {bi, ai}));
    }
    return out;
}

Matrix<RatFn> generator_matrix(const P1Spec& spec) {
    validate(spec);
    Matrix<RatFn> g(spec.k(), spec.n(), RatFn::zero(spec.field));
    for (int m = 0; m < spec.k(); ++m)
        for (int i = 0; i < spec.n(); ++i) g(m, i) = spec.alphas[i].pow(spec.s + m);
    return g;
}

std::vector<RatFn> residue_weights(const P1Spec& spec) {
    validate(spec);
    std::vector<RatFn> h;
    h.reserve(spec.n());
    for (int j = 0; j < spec.n(); ++j) {
        RatFn den = spec.alphas[j].pow(spec.s);
        for (int i = 0; i < spec.n(); ++i)
            if (i != j) den *= spec.alphas[j] - spec.alphas[i];
        h.push_back(den.inverse());
    }
    return h;
}

Matrix<RatFn> dual_matrix(const P1Spec& spec) {
    validate(spec);
    const int rows = spec.n() - spec.k();
    if (rows <= 0) throw Error(ErrorKind::EmptyDual, "k = n leaves no dual rows");
    const auto h = residue_weights(spec);
    Matrix<RatFn> out(rows, spec.n(), RatFn::zero(spec.field));
    for (int j = 0; j < spec.n(); ++j) {
        RatFn entry = h[j];
        for (int m = 0; m < rows; ++m) {
            out(m, j) = entry;
            entry *= spec.alphas[j];
        }
    }
    return out;
}

} // namespace cgc
