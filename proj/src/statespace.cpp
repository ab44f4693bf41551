#include "cgc/statespace.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace cgc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

} // namespace

Realization make_realization(Matrix<Fq> A, Matrix<Fq> B, Matrix<Fq> C, Matrix<Fq> D) {
    const int delta = static_cast<int>(A.rows());
    const int k = static_cast<int>(D.rows());
    const int n = static_cast<int>(D.cols());
    require(A.cols() == A.rows(), "A must be square");
    require(static_cast<int>(B.rows()) == k && static_cast<int>(B.cols()) == delta, "B must be k x delta");
    require(static_cast<int>(C.rows()) == delta && static_cast<int>(C.cols()) == n, "C must be delta x n");
    return {n, k, delta, std::move(A), std::move(B), std::move(C), std::move(D)};
}

Realization realize(const PolyEncoder& m) {
    const FieldSpec& f = m.field();
    const int k = static_cast<int>(m.k());
    const int n = static_cast<int>(m.n());
    const int delta = m.degree();
    Matrix<Fq> A(delta, delta, f.zero()), B(k, delta, f.zero()), C(delta, n, f.zero()), D(k, n, f.zero());

    int offset = 0;
    for (int i = 0; i < k; ++i) {
        const int nu = m.row_degrees[i];
        for (int j = 0; j < n; ++j) D(i, j) = m.entries(i, j).coefficient(0);
        if (nu == 0) continue;
        B(i, offset) = f.one();
        for (int l = 0; l + 1 < nu; ++l) A(offset + l, offset + l + 1) = f.one();
        for (int l = 1; l <= nu; ++l)
            for (int j = 0; j < n; ++j) C(offset + l - 1, j) = m.entries(i, j).coefficient(l);
        offset += nu;
    }
    return make_realization(std::move(A), std::move(B), std::move(C), std::move(D));
}

std::vector<SymbolVector> encode(const Realization& r, const std::vector<SymbolVector>& inputs, std::size_t steps) {
    require(steps >= inputs.size() + static_cast<std::size_t>(r.delta), "horizon shorter than input plus delta");
    const FieldSpec& f = r.field();
    SymbolVector state(r.delta, f.zero());
    const SymbolVector silent(r.k, f.zero());
    std::vector<SymbolVector> out;
    out.reserve(steps);

    for (std::size_t t = 0; t < steps; ++t) {
        const SymbolVector& u = t < inputs.size() ? inputs[t] : silent;
        require(static_cast<int>(u.size()) == r.k, "input vector length differs from k");

        SymbolVector y(r.n, f.zero());
        SymbolVector next(r.delta, f.zero());
        for (int a = 0; a < r.delta; ++a) {
            if (state[a].is_zero()) continue;
            for (int j = 0; j < r.n; ++j) y[j] += state[a] * r.C(a, j);
            for (int b = 0; b < r.delta; ++b) next[b] += state[a] * r.A(a, b);
        }
        for (int i = 0; i < r.k; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < r.n; ++j) y[j] += u[i] * r.D(i, j);
            for (int b = 0; b < r.delta; ++b) next[b] += u[i] * r.B(i, b);
        }
        out.push_back(std::move(y));
        state = std::move(next);
    }
    return out;
}

std::vector<SymbolVector> multiply_series(const std::vector<SymbolVector>& inputs, const Matrix<Poly>& m,
                                          std::size_t steps) {
    const FieldSpec& f = m.zero().field();
    std::vector<SymbolVector> out(steps, SymbolVector(m.cols(), f.zero()));
    for (std::size_t t = 0; t < inputs.size(); ++t)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (inputs[t][i].is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Poly& p = m(i, j);
                for (int l = 0; l <= p.degree(); ++l)
                    if (t + l < steps) out[t + l][j] += inputs[t][i] * p.coefficient(l);
            }
        }
    return out;
}

bool verify(const Realization& r, const PolyEncoder& m, int max_degree, std::uint64_t exhaustive_limit,
            std::size_t sample_size) {
    require(r.n == static_cast<int>(m.n()) && r.k == static_cast<int>(m.k()),
            "realization is " + std::to_string(r.k) + "x" + std::to_string(r.n) + ", encoder is " +
                std::to_string(m.k()) + "x" + std::to_string(m.n()));
    require(r.field() == m.field(), "realization and encoder live in different fields");
    const FieldSpec& f = m.field();
    const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
    int mdeg = 0;
    for (int nu : m.row_degrees) mdeg = std::max(mdeg, nu);
    const std::size_t steps = len + static_cast<std::size_t>(std::max(mdeg, r.delta));
    const std::size_t digits = len * m.k();

    const auto check = [&](const std::vector<Symbol>& code) {
        std::vector<SymbolVector> u(len, SymbolVector(m.k(), f.zero()));
        for (std::size_t d = 0; d < digits; ++d) u[d / m.k()][d % m.k()] = f.element(code[d]);
        return encode(r, u, steps) == multiply_series(u, m.entries, steps);
    };

    std::uint64_t total = 1;
    bool exhaustive = true;
    for (std::size_t d = 0; d < digits && exhaustive; ++d) {
        total *= f.q();
        if (total > exhaustive_limit) exhaustive = false;
    }

    std::vector<Symbol> code(digits, 0);
    if (exhaustive) {
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t d = 0; d < digits; ++d, v /= f.q()) code[d] = static_cast<Symbol>(v % f.q());
            if (!check(code)) return false;
        }
        return true;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Symbol> pick(0, f.q() - 1);
    for (std::size_t s = 0; s < sample_size; ++s) {
        for (auto& c : code) c = pick(rng);
        if (!check(code)) return false;
    }
    return true;
}

} // namespace cgc
