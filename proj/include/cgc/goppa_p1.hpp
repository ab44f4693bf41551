#pragma once

#include "cgc/matrix.hpp"
#include "cgc/ratfn.hpp"

#include <vector>

namespace cgc {

/// Divisor data on the projective line over F_q(z): evaluation points
/// p_1..p_n given by their affine coordinates, D = p_1+...+p_n and
/// G = r·p_∞ − s·p_0.
struct P1Spec {
    FieldSpec field;
    std::vector<RatFn> alphas;
    int r = 0;
    int s = 0;

    int n() const noexcept { return static_cast<int>(alphas.size()); }
    /// Code dimension r − s + 1.
    int k() const noexcept { return r - s + 1; }
};

/// Checks 0 ≤ s ≤ r < n, that every point is distinct and none sits at the
/// origin. Throws InvalidSpec, DuplicatePoints or DegeneratePoints.
void validate(const P1Spec& spec);

/// The points a^{i-1}·z + b^{i-1}, i = 1..n. Requires a, b nonzero and
/// distinct and n < q (DegeneratePoints otherwise).
std::vector<RatFn> standard_points(const Fq& a, const Fq& b, int n);

/// k×n evaluation matrix of the basis t^s, ..., t^r: entry (m, i) = α_i^{s+m}.
Matrix<RatFn> generator_matrix(const P1Spec& spec);

/// Residues h_j = 1 / (α_j^s · Π_{i≠j}(α_j − α_i)) of dt / (t^s Π(t − α_i)).
std::vector<RatFn> residue_weights(const P1Spec& spec);

/// (n−k)×n residue matrix with entries h_j·α_j^m, m = 0..n−r+s−2. Throws
/// EmptyDual when the code is the whole space.
Matrix<RatFn> dual_matrix(const P1Spec& spec);

} // namespace cgc
