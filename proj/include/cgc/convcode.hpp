#pragma once

#include "cgc/matrix.hpp"
#include "cgc/ratfn.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cgc {

/// Polynomial k×n encoder with its row degrees ν_i and structural flags.
struct PolyEncoder {
    Matrix<Poly> entries;
    std::vector<int> row_degrees;
    /// k×k minors have gcd 1.
    bool is_basic = false;
    /// Leading row coefficient matrix has full rank.
    bool is_minimal = false;

    std::size_t k() const noexcept { return entries.rows(); }
    std::size_t n() const noexcept { return entries.cols(); }
    /// Σ ν_i.
    int degree() const noexcept;
    const FieldSpec& field() const noexcept { return entries.zero().field(); }
};

/// Wraps a full-rank polynomial matrix, computing row degrees and flags.
/// Throws RankDeficient.
PolyEncoder make_encoder(Matrix<Poly> entries);

Matrix<RatFn> to_rational(const Matrix<Poly>& m);

/// Row i holds the coefficients of z^{ν_i} of row i.
Matrix<Fq> leading_coefficient_matrix(const Matrix<Poly>& m);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Poly determinant(const Matrix<Poly>& m);

/// Monic gcd of all k×k minors of a k×n matrix; zero when rank < k.
Poly maximal_minor_gcd(const Matrix<Poly>& m);

/// Scales every row by the monic lcm of its denominators. Throws
/// RankDeficient unless the rows are independent over F_q(z).
PolyEncoder clear_denominators(const Matrix<RatFn>& g);

/// U·M·V = [diag(γ_1..γ_r) | 0] with U, V unimodular, γ_i monic and
/// γ_i | γ_{i+1}. V_inverse is tracked alongside V.
struct SmithForm {
    Matrix<Poly> U;
    Matrix<Poly> V;
    Matrix<Poly> V_inverse;
    std::vector<Poly> invariant_factors;
};

SmithForm smith_form(const Matrix<Poly>& m);

struct BasicExtraction {
    PolyEncoder encoder;
    /// Minor gcd of the input encoder.
    Poly input_minor_gcd;
    /// The input's minor gcd has a factor other than a power of z.
    bool input_was_catastrophic = false;
};

/// Encoder with the same rational row space whose maximal minors are coprime.
/// Basic inputs are returned unchanged; otherwise the first k rows of V⁻¹
/// from the Smith form are used.
BasicExtraction basic_encoder(const PolyEncoder& m);

/// Reduces a basic encoder until its leading row coefficient matrix has full
/// rank, keeping the row space. Minimal inputs are returned unchanged.
PolyEncoder row_reduce(const PolyEncoder& m);

/// Controller-form state diagram of a polynomial encoder. The state is the
/// concatenation of one shift register of length ν_i per input, most recent
/// symbol first, packed as base-q digits.
class StateDiagram {
public:
    /// Throws SearchSpaceTooLarge when states × inputs exceeds `max_branches`.
    explicit StateDiagram(const PolyEncoder& m, std::uint64_t max_branches = std::uint64_t{1} << 24);

    std::uint64_t num_states() const noexcept { return num_states_; }
    std::uint64_t num_inputs() const noexcept { return num_inputs_; }

    /// Next state and output symbols for input vector `input` (packed base q).
    std::pair<std::uint64_t, std::vector<Symbol>> step(std::uint64_t state, std::uint64_t input) const;

    std::uint64_t next(std::uint64_t state, std::uint64_t input) const noexcept {
        return next_[state * num_inputs_ + input];
    }
    int weight(std::uint64_t state, std::uint64_t input) const noexcept {
        return weight_[state * num_inputs_ + input];
    }

private:
    FieldSpec field_;
    std::size_t k_, n_;
    std::vector<int> nu_, offset_;
    std::vector<std::vector<std::vector<Symbol>>> coef_; // [row][col][power]
    std::uint64_t num_states_ = 1, num_inputs_ = 1;
    int delta_ = 0;
    std::vector<std::uint64_t> next_;
    std::vector<int> weight_;
};

/// Minimum Hamming weight over nonzero codewords, by uniform-cost search for
/// the lightest detour from the zero state. Requires a minimal basic encoder;
/// throws CatastrophicEncoder on a zero-weight cycle through nonzero states.
int free_distance(const PolyEncoder& m);

/// Brute force: min weight of u·M over nonzero inputs with deg u_i ≤ deg_bound,
/// enumerated time step by time step with weight pruning. Throws
/// SearchSpaceTooLarge when more than `node_budget` partial inputs are visited.
int free_distance_oracle(const PolyEncoder& m, int deg_bound, std::uint64_t node_budget = 50'000'000);

/// Generalized Singleton bound (n−k)(⌊δ/k⌋+1) + δ + 1.
int singleton_bound(int n, int k, int delta);

struct CodeReport {
    int n = 0;
    int k = 0;
    int delta = 0;
    int d_free = 0;
    int singleton_bound = 0;
    bool is_mds = false;
    bool input_was_catastrophic = false;
};

bool is_mds(const CodeReport& report);

/// True iff H·Gᵀ = 0. Throws ShapeMismatch when the lengths differ.
bool check_dual(const Matrix<RatFn>& g, const Matrix<RatFn>& h);

struct Analysis {
    PolyEncoder cleared;
    PolyEncoder encoder; // minimal basic
    Poly input_minor_gcd;
    CodeReport report;
};

/// Full pipeline: clear denominators, extract a basic encoder, row reduce,
/// then δ, free distance and the bound.
Analysis analyze(const Matrix<RatFn>& g);

} // namespace cgc
