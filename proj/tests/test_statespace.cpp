#include "cgc/error.hpp"
#include "cgc/fixtures.hpp"
#include "cgc/statespace.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace cgc;
using namespace cgc::testing;

namespace {

const Realization& printed(const std::string& name) { return *fixture(name).spec.reference.realization; }

PolyEncoder printed_encoder(const std::string& name) {
    return clear_denominators(*fixture(name).spec.reference.generator);
}

SymbolVector ints(const FieldSpec& f, std::initializer_list<int> v) {
    SymbolVector out;
    for (int x : v) out.push_back(f.from_int(x));
    return out;
}

// Coefficients of u·M by plain polynomial arithmetic.
std::vector<SymbolVector> product_coefficients(const std::vector<SymbolVector>& inputs, const Matrix<Poly>& m,
                                               std::size_t steps) {
    const FieldSpec& f = m.zero().field();
    std::vector<Poly> u(m.rows(), Poly(f));
    for (std::size_t t = 0; t < inputs.size(); ++t)
        for (std::size_t i = 0; i < m.rows(); ++i) u[i] += Poly::monomial(inputs[t][i], static_cast<int>(t));
    const auto c = codeword(u, m);
    std::vector<SymbolVector> out(steps);
    for (std::size_t t = 0; t < steps; ++t)
        for (const Poly& p : c) out[t].push_back(p.coefficient(static_cast<int>(t)));
    return out;
}

} // namespace

TEST(Realize, F3) {
    const PolyEncoder m = printed_encoder("p1-f3");
    const Realization r = realize(m);
    EXPECT_EQ(r.delta, 1);
    EXPECT_TRUE(verify(r, m, 3));
    EXPECT_TRUE(verify(printed("p1-f3"), m, 3));
}

TEST(Realize, F5FourthItemMatchesPrintedMatrices) {
    const PolyEncoder m = printed_encoder("p1-f5-a");
    const Realization r = realize(m);
    EXPECT_EQ(r.delta, 2);
    const Realization& p = printed("p1-f5-a");
    EXPECT_EQ(r.A, p.A);
    EXPECT_EQ(r.B, p.B);
    EXPECT_EQ(r.C, p.C);
    EXPECT_EQ(r.D, p.D);
}

TEST(Realize, Memoryless) {
    const FieldSpec f = FieldSpec::prime(3);
    const auto m = Matrix<Poly>::from_rows({{Poly::from_ints(f, {1}), Poly::from_ints(f, {2})}}, Poly(f));
    const Realization r = realize(make_encoder(m));
    EXPECT_EQ(r.delta, 0);
    EXPECT_EQ(r.A.rows(), 0u);
    EXPECT_EQ(r.B.cols(), 0u);
    EXPECT_EQ(r.C.rows(), 0u);
    EXPECT_EQ(r.D, (Matrix<Fq>::from_rows({{f.from_int(1), f.from_int(2)}}, f.zero())));
}

TEST(Encode, Examples) {
    const FieldSpec f3 = FieldSpec::prime(3);
    const auto y = encode(printed("p1-f3"), {ints(f3, {1})}, 2);
    EXPECT_EQ(y, (std::vector<SymbolVector>{ints(f3, {1, 2}), ints(f3, {1, 1})}));

    const auto zeros = encode(printed("p1-f5-b"), std::vector<SymbolVector>(3, ints(FieldSpec::prime(5), {0, 0})), 6);
    for (const auto& v : zeros)
        for (const Fq& a : v) EXPECT_TRUE(a.is_zero());

    const FieldSpec f4 = field_of_order(4);
    const auto y4 = encode(printed("p1-f4-a"), {SymbolVector{f4.one(), f4.zero()}}, 3);
    EXPECT_EQ(y4[0], (SymbolVector{f4.one(), f4.one(), f4.one()}));
    EXPECT_EQ(y4[1], SymbolVector(3, f4.zero()));
    EXPECT_EQ(y4[2], SymbolVector(3, f4.zero()));
}

TEST(Encode, HorizonTooShort) {
    const FieldSpec f5 = FieldSpec::prime(5);
    EXPECT_THROW(encode(printed("p1-f5-a"), {ints(f5, {1})}, 2), Error);
    EXPECT_THROW(encode(printed("p1-f5-a"), {ints(f5, {1, 1})}, 4), Error);
}

TEST(Verify, Examples) {
    EXPECT_TRUE(verify(printed("p1-f3"), printed_encoder("p1-f3"), 3));
    EXPECT_TRUE(verify(printed("p1-f5-b"), printed_encoder("p1-f5-b"), 2));
    try {
        verify(printed("p1-f3"), printed_encoder("p1-f4-a"), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
}

TEST(Verify, DetectsWrongRealization) {
    Realization r = printed("p1-f5-a");
    const FieldSpec& f = r.field();
    r.C(1, 2) = r.C(1, 2) + f.one();
    EXPECT_FALSE(verify(r, printed_encoder("p1-f5-a"), 2));
    // Forces the sampled mode.
    EXPECT_FALSE(verify(r, printed_encoder("p1-f5-a"), 3, 10, 300));
    EXPECT_TRUE(verify(printed("p1-f5-a"), printed_encoder("p1-f5-a"), 3, 10, 300));
}

TEST(Realize, EncodeEqualsMultiplication) {
    std::mt19937 rng(404);
    int checked = 0;
    for (int t = 0; checked < 40; ++t) {
        const FieldSpec f = field_of_order(2 + t % 3);
        const std::size_t k = 1 + t % 2;
        const auto raw = random_poly_matrix(f, k, 3, 2, rng);
        if (rank(to_rational(raw)) < k) continue;
        const PolyEncoder m = analyze(to_rational(raw)).encoder;
        if (m.degree() > 3) continue;
        const Realization r = realize(m);
        ASSERT_EQ(r.delta, m.degree());
        std::vector<SymbolVector> u(5);
        for (auto& step : u)
            for (std::size_t i = 0; i < k; ++i) step.push_back(random_element(f, rng));
        const std::size_t steps = u.size() + r.delta;
        ASSERT_EQ(encode(r, u, steps), product_coefficients(u, m.entries, steps));
        ASSERT_EQ(multiply_series(u, m.entries, steps), product_coefficients(u, m.entries, steps));
        ++checked;
    }
}

TEST(Realize, Linearity) {
    std::mt19937 rng(6);
    const Realization& r = printed("p1-f5-b");
    const FieldSpec& f = r.field();
    for (int t = 0; t < 50; ++t) {
        std::vector<SymbolVector> u(4), v(4), w(4);
        for (std::size_t s = 0; s < 4; ++s)
            for (int i = 0; i < r.k; ++i) {
                u[s].push_back(random_element(f, rng));
                v[s].push_back(random_element(f, rng));
                w[s].push_back(u[s].back() + v[s].back());
            }
        const auto yu = encode(r, u, 7), yv = encode(r, v, 7), yw = encode(r, w, 7);
        for (std::size_t s = 0; s < 7; ++s)
            for (int j = 0; j < r.n; ++j) ASSERT_EQ(yw[s][j], yu[s][j] + yv[s][j]);
    }
}
