#pragma once

#include "cgc/matrix.hpp"
#include "cgc/ratfn.hpp"

#include <vector>

namespace cgc {

/// y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 over F_q(z).
struct WeierstrassCurve {
    RatFn a1, a2, a3, a4, a6;
};

struct EllipticPoint {
    RatFn x, y;

    friend bool operator==(const EllipticPoint&, const EllipticPoint&) = default;
};

/// The function x^i·y^j, which has pole order 2i + 3j at infinity.
struct Monomial {
    int x_power = 0;
    int y_power = 0;

    int pole_order() const noexcept { return 2 * x_power + 3 * y_power; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Affine points p_1..p_n on a plane cubic, G = r·p_∞ and a subspace Γ of
/// L(G) spanned by monomials.
struct EllipticSpec {
    FieldSpec field;
    WeierstrassCurve curve;
    std::vector<EllipticPoint> points;
    int r = 0;
    std::vector<Monomial> gamma;

    int n() const noexcept { return static_cast<int>(points.size()); }
};

/// Discriminant from the usual b2, b4, b6, b8 quantities. Throws
/// SmoothnessFailure when it vanishes.
RatFn discriminant(const WeierstrassCurve& curve);

/// Exact substitution into the curve equation.
bool on_curve(const WeierstrassCurve& curve, const EllipticPoint& pt);

/// Monomial basis of L(r·p_∞): every x^i y^j with j ∈ {0,1} and 2i+3j ≤ r,
/// ordered by pole order. Throws InvalidDegree for r < 1.
std::vector<Monomial> canonical_basis(int r);

/// Smoothness, point membership, distinctness and Γ ⊆ L(G).
void validate(const EllipticSpec& spec);

/// One row per monomial in Γ, entry x_t^i·y_t^j at point t.
Matrix<RatFn> generator_matrix(const EllipticSpec& spec);

} // namespace cgc
