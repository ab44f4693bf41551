#include "cgc/error.hpp"
#include "cgc/format.hpp"
#include "cgc/io.hpp"
#include "cgc/ratfn.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace cgc;
using namespace cgc::testing;

TEST(Poly, Basics) {
    const FieldSpec f = FieldSpec::prime(3);
    const Poly zero(f);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), Poly::kMinusInfinity);
    EXPECT_EQ(Poly::from_ints(f, {1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(Poly::from_ints(f, {0, 0, 3}), zero); // 3 ≡ 0
    EXPECT_EQ(Poly::from_ints(f, {-1}), Poly::from_ints(f, {2}));
}

TEST(Poly, SpecExamples) {
    const FieldSpec f2 = FieldSpec::prime(2);
    // z³+z² = z²(z+1) and z²+z = z(z+1) share z(z+1).
    const Poly a = Poly::from_ints(f2, {0, 0, 1, 1});
    const Poly b = Poly::from_ints(f2, {0, 1, 1});
    const Poly z = Poly::z(f2), one(f2.one());
    EXPECT_EQ(gcd(a, b), z * (z + one));
    EXPECT_EQ(gcd(a, b), Poly::from_ints(f2, {0, 1, 1}));

    const FieldSpec f3 = FieldSpec::prime(3);
    EXPECT_EQ(Poly::from_ints(f3, {1, 1}) * Poly::from_ints(f3, {2, 1}), Poly::from_ints(f3, {2, 0, 1}));
    EXPECT_EQ(Poly::from_ints(f3, {2, 0, 1}).eval(f3.one()), f3.zero());
}

TEST(Poly, GcdConventions) {
    const FieldSpec f5 = FieldSpec::prime(5);
    const Poly zero(f5);
    EXPECT_EQ(gcd(zero, zero), zero);
    const Poly p = Poly::from_ints(f5, {2, 4}); // 4z + 2
    EXPECT_EQ(gcd(p, zero), p.monic());
    EXPECT_TRUE(gcd(p, zero).is_monic());
    EXPECT_EQ(lcm(Poly::from_ints(f5, {1, 1}), Poly::from_ints(f5, {2, 1})), Poly::from_ints(f5, {2, 3, 1}));
}

TEST(Poly, Errors) {
    const FieldSpec f3 = FieldSpec::prime(3);
    EXPECT_THROW(divrem(Poly::z(f3), Poly(f3)), Error);
    try {
        (void)(Poly::z(f3) + Poly::z(FieldSpec::prime(5)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MixedFields);
    }
}

TEST(Poly, Format) {
    const FieldSpec f4 = field_of_order(4);
    const Fq a = f4.alpha();
    EXPECT_EQ(to_string(Poly::from_coeffs(f4, {a * a, a})), "αz+α²");
    EXPECT_EQ(to_string(Poly::from_coeffs(f4, {f4.one(), f4.zero(), f4.one()})), "z²+1");
    const FieldSpec f3 = FieldSpec::prime(3);
    EXPECT_EQ(to_string(Poly::from_ints(f3, {2, 0, 2})), "2z²+2");
    EXPECT_EQ(to_string(Poly(f3)), "0");
}

TEST(Poly, DivremRoundTrip) {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec f = field_of_order(q);
        for (int t = 0; t < 60; ++t) {
            const Poly a = random_poly(f, 8, rng);
            const Poly b = random_nonzero_poly(f, 5, rng);
            const auto [quot, rem] = divrem(a, b);
            ASSERT_EQ(quot * b + rem, a);
            ASSERT_TRUE(rem.is_zero() || rem.degree() < b.degree());
        }
    }
}

TEST(Poly, GcdDividesAndIsGreatest) {
    std::mt19937 rng(5);
    for (int q : {2, 3, 4, 5}) {
        const FieldSpec f = field_of_order(q);
        for (int t = 0; t < 50; ++t) {
            const Poly c = random_nonzero_poly(f, 3, rng);
            const Poly a = random_nonzero_poly(f, 4, rng) * c;
            const Poly b = random_nonzero_poly(f, 4, rng) * c;
            const Poly g = gcd(a, b);
            ASSERT_TRUE(g.is_monic());
            ASSERT_TRUE(divrem(a, g).second.is_zero());
            ASSERT_TRUE(divrem(b, g).second.is_zero());
            ASSERT_TRUE(divrem(g, c.monic()).second.is_zero());
        }
    }
}

TEST(RatFn, SpecExamples) {
    const FieldSpec f5 = FieldSpec::prime(5);
    const RatFn r(Poly::from_ints(f5, {2, 2}), Poly::from_ints(f5, {4, 2}));
    EXPECT_EQ(r.num(), Poly::from_ints(f5, {1, 1}));
    EXPECT_EQ(r.den(), Poly::from_ints(f5, {2, 1}));

    const RatFn zp1(Poly::from_ints(f5, {1, 1}));
    EXPECT_EQ(zp1.inverse() * zp1, RatFn::one(f5));

    const FieldSpec f3 = FieldSpec::prime(3);
    const RatFn two_zp1(Poly::from_ints(f3, {2, 2}));
    const RatFn inv = two_zp1.inverse();
    EXPECT_EQ(inv.num(), Poly::from_ints(f3, {2}));
    EXPECT_EQ(inv.den(), Poly::from_ints(f3, {1, 1}));
    EXPECT_EQ(to_string(inv), "2/(z+1)");
}

TEST(RatFn, Conventions) {
    const FieldSpec f3 = FieldSpec::prime(3);
    const RatFn zero = RatFn::zero(f3);
    EXPECT_TRUE(zero.den().is_one());
    EXPECT_EQ(RatFn(Poly(f3), Poly::from_ints(f3, {1, 2})), zero);
    EXPECT_THROW(RatFn(Poly::z(f3), Poly(f3)), Error);
    EXPECT_THROW(zero.inverse(), Error);
    const RatFn x(Poly::from_ints(f3, {1, 1}), Poly::from_ints(f3, {0, 1}));
    EXPECT_EQ(x.pow(-2) * x.pow(2), RatFn::one(f3));
    EXPECT_EQ(x.pow(0), RatFn::one(f3));
    EXPECT_EQ(x.pow(3), x * x * x);
}

TEST(RatFn, CanonicalFormSoundness) {
    std::mt19937 rng(3);
    for (int q : {2, 3, 4, 5, 7}) {
        const FieldSpec f = field_of_order(q);
        for (int t = 0; t < 60; ++t) {
            const Poly a = random_nonzero_poly(f, 4, rng);
            const Poly b = random_nonzero_poly(f, 4, rng);
            const Poly c = random_nonzero_poly(f, 3, rng);
            const RatFn lhs(a * c, b * c);
            ASSERT_EQ(lhs, RatFn(a, b));
            ASSERT_TRUE(lhs.den().is_monic());
            ASSERT_TRUE(gcd(lhs.num(), lhs.den()).is_one());
        }
    }
}

TEST(RatFn, EqualityLaw) {
    std::mt19937 rng(4);
    for (int q : {2, 3, 4}) {
        const FieldSpec f = field_of_order(q);
        for (int t = 0; t < 200; ++t) {
            // Small degrees so that equal pairs actually occur.
            const Poly a = random_poly(f, 1, rng), b = random_nonzero_poly(f, 1, rng);
            const Poly c = random_poly(f, 1, rng), d = random_nonzero_poly(f, 1, rng);
            ASSERT_EQ(RatFn(a, b) == RatFn(c, d), a * d == c * b);
        }
    }
}

TEST(RatFn, FieldAxiomsOnSamples) {
    std::mt19937 rng(8);
    const FieldSpec f = field_of_order(4);
    for (int t = 0; t < 100; ++t) {
        const RatFn a = random_ratfn(f, 3, rng), b = random_ratfn(f, 3, rng), c = random_ratfn(f, 3, rng);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) - b, a);
        if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
    }
}

TEST(RatFn, Serialize) {
    const FieldSpec f3 = FieldSpec::prime(3);
    const RatFn r(Poly::from_ints(f3, {2}), Poly::from_ints(f3, {1, 1}));
    EXPECT_EQ(to_json(r).dump(), R"({"num":[2],"den":[1,1]})");
    EXPECT_EQ(ratfn_from_json(to_json(r), f3, "x"), r);
    EXPECT_EQ(ratfn_from_json(Json::parse("[1,1]"), f3, "x"), RatFn(Poly::from_ints(f3, {1, 1})));
    EXPECT_THROW(ratfn_from_json(Json::parse(R"({"num":[1],"den":[]})"), f3, "x"), ParseError);
}

TEST(Matrix, RankAndProduct) {
    const FieldSpec f3 = FieldSpec::prime(3);
    const RatFn z(Poly::z(f3));
    const auto c = [&](int v) { return RatFn(f3.from_int(v)); };
    const auto g = Matrix<RatFn>::from_rows({{z + c(1), z + c(2)}}, c(0));
    EXPECT_EQ(rank(g), 1u);

    const FieldSpec f4 = field_of_order(4);
    const RatFn w(Poly::z(f4));
    const RatFn al(f4.alpha()), al2(f4.alpha().pow(2)), one = RatFn::one(f4);
    const auto g4 = Matrix<RatFn>::from_rows({{one, one, one}, {w + one, al * w + al2, al2 * w + al}}, RatFn::zero(f4));
    EXPECT_EQ(rank(g4), 2u);
    // Second row plus (z+1)·first row would be rank-1 only if the points coincided.
    EXPECT_EQ(rank(vstack(g4, Matrix<RatFn>::from_rows({{one, one, one}}, RatFn::zero(f4)))), 2u);

    const auto id = Matrix<RatFn>::identity(1, c(0));
    EXPECT_EQ(id * id, id);
    EXPECT_THROW(g * g, Error);
}

TEST(Matrix, KernelAnnihilates) {
    std::mt19937 rng(21);
    const FieldSpec f = field_of_order(3);
    for (int t = 0; t < 30; ++t) {
        Matrix<RatFn> m(2, 4, RatFn::zero(f));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_ratfn(f, 2, rng);
        const auto basis = kernel(m);
        ASSERT_EQ(basis.size() + rank(m), 4u);
        for (const auto& v : basis) {
            Matrix<RatFn> col(4, 1, RatFn::zero(f));
            for (std::size_t j = 0; j < 4; ++j) col(j, 0) = v[j];
            ASSERT_TRUE(is_zero_matrix(m * col));
        }
    }
}
