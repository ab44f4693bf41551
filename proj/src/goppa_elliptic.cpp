#include "cgc/goppa_elliptic.hpp"

#include "cgc/format.hpp"

#include <algorithm>
#include <string>

namespace cgc {

RatFn discriminant(const WeierstrassCurve& c) {
    const FieldSpec& f = c.a1.field();
    for (const RatFn* a : {&c.a2, &c.a3, &c.a4, &c.a6}) require_same_field(f, a->field());
    const auto k = [&](long long v) { return RatFn(f.from_int(v)); };

    const RatFn b2 = c.a1 * c.a1 + k(4) * c.a2;
    const RatFn b4 = k(2) * c.a4 + c.a1 * c.a3;
    const RatFn b6 = c.a3 * c.a3 + k(4) * c.a6;
    const RatFn b8 = c.a1 * c.a1 * c.a6 + k(4) * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 + c.a2 * c.a3 * c.a3 -
                     c.a4 * c.a4;
    const RatFn delta =
        -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
    if (delta.is_zero()) throw Error(ErrorKind::SmoothnessFailure, "curve discriminant vanishes");
    return delta;
}

bool on_curve(const WeierstrassCurve& c, const EllipticPoint& p) {
    const RatFn lhs = p.y * p.y + c.a1 * p.x * p.y + c.a3 * p.y;
    const RatFn rhs = p.x * p.x * p.x + c.a2 * p.x * p.x + c.a4 * p.x + c.a6;
    return lhs == rhs;
}

std::vector<Monomial> canonical_basis(int r) {
    if (r < 1) throw Error(ErrorKind::InvalidDegree, "r = " + std::to_string(r) + " must be at least 1");
    std::vector<Monomial> basis;
    for (int j = 0; j <= 1; ++j)
        for (int i = 0; 2 * i + 3 * j <= r; ++i) basis.push_back({i, j});
    std::stable_sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        if (a.pole_order() != b.pole_order()) return a.pole_order() < b.pole_order();
        return a.y_power < b.y_power;
    });
    return basis;
}

void validate(const EllipticSpec& spec) {
    if (spec.r < 1) throw Error(ErrorKind::InvalidDegree, "r = " + std::to_string(spec.r) + " must be at least 1");
    discriminant(spec.curve);

    for (int t = 0; t < spec.n(); ++t) {
        const EllipticPoint& p = spec.points[t];
        if (!on_curve(spec.curve, p))
            throw Error(ErrorKind::PointNotOnCurve, "point " + std::to_string(t + 1) + " = (" + to_string(p.x) +
                                                        ", " + to_string(p.y) + ")");
        for (int u = 0; u < t; ++u)
            if (spec.points[u] == p)
                throw Error(ErrorKind::DuplicatePoints,
                            "points " + std::to_string(u + 1) + " and " + std::to_string(t + 1) + " coincide");
    }

    if (spec.gamma.empty()) throw Error(ErrorKind::InvalidGamma, "gamma is empty");
    for (std::size_t a = 0; a < spec.gamma.size(); ++a) {
        const Monomial& mono = spec.gamma[a];
        if (mono.x_power < 0 || mono.y_power < 0 || mono.y_power > 1 || mono.pole_order() > spec.r)
            throw Error(ErrorKind::InvalidGamma, "x^" + std::to_string(mono.x_power) + " y^" +
                                                     std::to_string(mono.y_power) + " is not in L(" +
                                                     std::to_string(spec.r) + "·p_inf)");
        for (std::size_t b = 0; b < a; ++b)
            if (spec.gamma[b] == mono) throw Error(ErrorKind::InvalidGamma, "repeated monomial in gamma");
    }
}

Matrix<RatFn> generator_matrix(const EllipticSpec& spec) {
    validate(spec);
    Matrix<RatFn> g(spec.gamma.size(), spec.n(), RatFn::zero(spec.field));
    for (std::size_t row = 0; row < spec.gamma.size(); ++row)
        for (int t = 0; t < spec.n(); ++t)
            g(row, t) = spec.points[t].x.pow(spec.gamma[row].x_power) * spec.points[t].y.pow(spec.gamma[row].y_power);
    return g;
}

} // namespace cgc
