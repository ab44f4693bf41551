#include "cgc/fixtures.hpp"

#include <stdexcept>

namespace cgc {

namespace {

Matrix<Fq> fq_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, const std::vector<Fq>& entries) {
    Matrix<Fq> m(rows, cols, f.zero());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[i * cols + j];
    return m;
}

Matrix<RatFn> ratfn_matrix(const FieldSpec& f, const std::vector<std::vector<RatFn>>& rows) {
    return Matrix<RatFn>::from_rows(rows, RatFn::zero(f));
}

CodeSpec p1_spec(const std::string& name, const FieldSpec& f, const Fq& a, const Fq& b, int n, int r, int s) {
    CodeSpec spec{name, P1Spec{f, standard_points(a, b, n), r, s}, PointFamily{a, b, n}, true, {}, {}};
    return spec;
}

Fixture p1_f3() {
    const FieldSpec f = FieldSpec::prime(3);
    const auto k = [&](int v) { return f.from_int(v); };
    const RatFn z = RatFn(Poly::z(f));
    const RatFn one = RatFn::one(f);

    CodeSpec s = p1_spec("p1-f3", f, k(1), k(2), 2, 1, 1);
    s.reference.params = {2, 1, 1, 4};
    s.reference.generator = ratfn_matrix(f, {{z + one, z + RatFn(k(2))}});
    s.reference.dual = ratfn_matrix(f, {{(RatFn(k(2)) * (z + one)).inverse(), (z + RatFn(k(2))).inverse()}});
    s.reference.realization = make_realization(fq_matrix(f, 1, 1, {k(0)}), fq_matrix(f, 1, 1, {k(1)}),
                                               fq_matrix(f, 1, 2, {k(1), k(1)}), fq_matrix(f, 1, 2, {k(1), k(2)}));
    return {"p1-f3", "projective line over F_3(z), n=2, r=s=1", std::move(s)};
}

FieldSpec f4() { return FieldSpec::make(2, 2, std::vector<int>{1, 1, 1}); }

Fixture p1_f4_a() {
    const FieldSpec f = f4();
    const Fq al = f.alpha(), al2 = al * al, one = f.one(), zero = f.zero();
    const RatFn z = RatFn(Poly::z(f));
    const auto c = [](const Fq& v) { return RatFn(v); };

    CodeSpec s = p1_spec("p1-f4-a", f, al, al2, 3, 1, 0);
    s.reference.params = {3, 2, 1, 3};
    const RatFn p1 = z + c(one), p2 = c(al) * z + c(al2), p3 = c(al2) * z + c(al);
    s.reference.generator = ratfn_matrix(f, {{c(one), c(one), c(one)}, {p1, p2, p3}});
    s.reference.dual = ratfn_matrix(f, {{(p3 * p2).inverse(), (p3 * p1).inverse(), (p2 * p1).inverse()}});
    s.reference.realization =
        make_realization(fq_matrix(f, 1, 1, {zero}), fq_matrix(f, 2, 1, {zero, one}), fq_matrix(f, 1, 3, {one, al, al2}),
                         fq_matrix(f, 2, 3, {one, one, one, one, al2, al}));
    return {"p1-f4-a", "projective line over F_4(z), n=3, s=0, r=1", std::move(s)};
}

Fixture p1_f4_b() {
    const FieldSpec f = f4();
    const Fq al = f.alpha(), al2 = al * al, one = f.one(), zero = f.zero();
    const RatFn z = RatFn(Poly::z(f));
    const auto c = [](const Fq& v) { return RatFn(v); };

    CodeSpec s = p1_spec("p1-f4-b", f, one, al, 3, 1, 1);
    s.reference.params = {3, 1, 1, 6};
    s.reference.generator = ratfn_matrix(f, {{z + c(one), z + c(al), z + c(al2)}});
    s.reference.dual = ratfn_matrix(
        f, {{(z + c(one)).inverse(), c(al) / (z + c(al)), c(al2) / (z + c(al2))}, {c(one), c(al), c(al2)}});
    s.reference.realization = make_realization(fq_matrix(f, 1, 1, {zero}), fq_matrix(f, 1, 1, {one}),
                                               fq_matrix(f, 1, 3, {one, one, one}), fq_matrix(f, 1, 3, {one, al, al2}));
    return {"p1-f4-b", "projective line over F_4(z), n=3, r=s=1", std::move(s)};
}

Fixture p1_f5_a() {
    const FieldSpec f = FieldSpec::prime(5);
    const auto k = [&](int v) { return f.from_int(v); };
    const auto c = [&](int v) { return RatFn(f.from_int(v)); };
    const RatFn z = RatFn(Poly::z(f));

    CodeSpec s = p1_spec("p1-f5-a", f, k(1), k(2), 3, 2, 2);
    s.reference.params = {3, 1, 2, 9};
    const RatFn p1 = z + c(1), p2 = z + c(2), p3 = z + c(4);
    s.reference.generator = ratfn_matrix(f, {{p1.pow(2), p2.pow(2), p3.pow(2)}});
    s.reference.dual = ratfn_matrix(f, {{c(2) / p1.pow(2), c(2) / p2.pow(2), c(1) / p3.pow(2)},
                                        {c(2) / p1, c(2) / p2, c(1) / p3}});
    s.reference.realization = make_realization(
        fq_matrix(f, 2, 2, {k(0), k(1), k(0), k(0)}), fq_matrix(f, 1, 2, {k(1), k(0)}),
        fq_matrix(f, 2, 3, {k(2), k(4), k(3), k(1), k(1), k(1)}), fq_matrix(f, 1, 3, {k(1), k(4), k(1)}));
    return {"p1-f5-a", "projective line over F_5(z), n=3, r=s=2", std::move(s)};
}

Fixture p1_f5_b() {
    const FieldSpec f = FieldSpec::prime(5);
    const auto k = [&](int v) { return f.from_int(v); };
    const auto c = [&](int v) { return RatFn(f.from_int(v)); };
    const RatFn z = RatFn(Poly::z(f));

    CodeSpec s = p1_spec("p1-f5-b", f, k(2), k(3), 4, 2, 1);
    // Printed as (2,1,3,8) although the generator matrix is 2×4.
    s.reference.params = {2, 1, 3, 8};
    const RatFn p1 = z + c(1), p2 = c(2) * z + c(3), p3 = c(4) * z + c(4), p4 = c(3) * z + c(2);
    s.reference.generator = ratfn_matrix(f, {{p1, p2, p3, p4}, {p1.pow(2), p2.pow(2), p3.pow(2), p4.pow(2)}});
    const RatFn d1 = (z + c(1)).pow(2) * (z + c(2)) * (z + c(3));
    const RatFn d2 = (z + c(2)) * (z + c(3)) * (z + c(4)).pow(2);
    const RatFn e1 = (z + c(1)) * (z + c(2)) * (z + c(3));
    const RatFn e2 = (z + c(2)) * (z + c(3)) * (z + c(4));
    s.reference.dual = ratfn_matrix(f, {{c(4) / d1, c(4) / d2, c(4) / d1, c(4) / d2},
                                        {c(4) / e1, c(3) / e2, c(1) / e1, c(2) / e2}});
    s.reference.realization = make_realization(
        fq_matrix(f, 3, 3, {k(0), k(0), k(0), k(0), k(0), k(1), k(0), k(0), k(0)}),
        fq_matrix(f, 2, 3, {k(1), k(0), k(0), k(0), k(1), k(0)}),
        fq_matrix(f, 3, 4, {k(1), k(2), k(4), k(3), k(2), k(2), k(2), k(2), k(1), k(4), k(1), k(4)}),
        fq_matrix(f, 2, 4, {k(1), k(3), k(4), k(2), k(1), k(4), k(1), k(4)}));
    return {"p1-f5-b", "projective line over F_5(z), n=4, s=1, r=2", std::move(s)};
}

// Polynomial over F_2 from the exponents of its nonzero terms.
RatFn f2_poly(const FieldSpec& f, std::initializer_list<int> powers) {
    Poly p(f);
    for (int e : powers) p += Poly::monomial(f.one(), e);
    return RatFn(p);
}

Fixture elliptic_1() {
    const FieldSpec f = FieldSpec::prime(2);
    const auto P = [&](std::initializer_list<int> e) { return f2_poly(f, e); };
    const RatFn zero = RatFn::zero(f), one = RatFn::one(f);

    EllipticSpec e{f, {P({0, 1}), P({1, 2}), P({1, 2}), zero, zero},
                   {{P({2, 1}), P({3, 2})}, {zero, P({2, 1})}, {P({1}), P({2})}},
                   2,
                   {{0, 0}, {1, 0}}};
    CodeSpec s{"elliptic-1", e, std::nullopt, true, {}, {}};
    s.reference.generator = ratfn_matrix(f, {{one, one, one}, {P({2, 1}), zero, P({1})}});
    s.reference.d_free = 2;
    s.reference.max_distance = 3;
    return {"elliptic-1", "elliptic curve over F_2(z), three points, Γ = <1, x>", std::move(s)};
}

Fixture elliptic_2() {
    const FieldSpec f = FieldSpec::prime(2);
    const auto P = [&](std::initializer_list<int> e) { return f2_poly(f, e); };
    const RatFn zero = RatFn::zero(f), one = RatFn::one(f);

    EllipticSpec e{f,
                   {P({0, 1, 2}), P({2, 3}), P({2, 3}), zero, zero},
                   {{P({3, 2}), zero},
                    {zero, P({3, 2})},
                    {P({3, 2}), P({5, 3})},
                    {P({2, 1}), P({3, 1})},
                    {P({2, 1}), P({4, 2})}},
                   2,
                   {{0, 0}, {1, 0}}};
    CodeSpec s{"elliptic-2", e, std::nullopt, true, {}, {}};
    s.reference.generator =
        ratfn_matrix(f, {{one, one, one, one, one}, {P({3, 2}), zero, P({3, 2}), P({2, 1}), P({2, 1})}});
    s.reference.d_free = 4;
    s.reference.max_distance = 5;
    return {"elliptic-2", "elliptic curve over F_2(z), five points, Γ = <1, x>", std::move(s)};
}

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {p1_f3(), p1_f4_a(), p1_f4_b(), p1_f5_a(),
                                             p1_f5_b(), elliptic_1(), elliptic_2()};
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& fx : fixtures())
        if (fx.name == name) return fx;
    throw std::out_of_range("unknown fixture '" + name + "'");
}

} // namespace cgc
