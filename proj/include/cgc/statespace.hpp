#pragma once

#include "cgc/convcode.hpp"

#include <cstdint>
#include <vector>

namespace cgc {

/// Linear system s_{t+1} = s_t·A + u_t·B, y_t = s_t·C + u_t·D over F_q with
/// row-vector state of length δ.
struct Realization {
    int n = 0;
    int k = 0;
    int delta = 0;
    Matrix<Fq> A; // δ×δ
    Matrix<Fq> B; // k×δ
    Matrix<Fq> C; // δ×n
    Matrix<Fq> D; // k×n

    const FieldSpec& field() const noexcept { return D.zero().field(); }
};

/// Throws ShapeMismatch when the four matrices disagree with (n, k, δ).
Realization make_realization(Matrix<Fq> A, Matrix<Fq> B, Matrix<Fq> C, Matrix<Fq> D);

/// Controller canonical form: one shift register of length ν_i per input row,
/// concatenated, most recent symbol first.
Realization realize(const PolyEncoder& m);

using SymbolVector = std::vector<Fq>;

/// Runs the recurrence from s_0 = 0 for `steps` steps, feeding zeros after
/// the input ends. Requires steps ≥ inputs.size() + δ.
std::vector<SymbolVector> encode(const Realization& r, const std::vector<SymbolVector>& inputs, std::size_t steps);

/// Compares the realization with u·M for every input of degree ≤ max_degree
/// (exhaustive up to `exhaustive_limit` inputs, otherwise a seeded sample of
/// `sample_size`). Throws ShapeMismatch when n or k differ.
bool verify(const Realization& r, const PolyEncoder& m, int max_degree, std::uint64_t exhaustive_limit = 2'000'000,
            std::size_t sample_size = 1000);

/// Coefficients of u·M for a polynomial input given as per-time input vectors;
/// the result has `steps` entries.
std::vector<SymbolVector> multiply_series(const std::vector<SymbolVector>& inputs, const Matrix<Poly>& m,
                                          std::size_t steps);

} // namespace cgc
