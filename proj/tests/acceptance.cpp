// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "cgc/error.hpp"
#include "cgc/fixtures.hpp"
#include "cgc/pipeline.hpp"
#include "support/generators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cgc;
using namespace cgc::testing;

namespace {

// Collects failed expectations for one criterion.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <typename A, typename B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream s;
            s << what << " (got " << got << ", want " << want << ")";
            failures_.push_back(s.str());
        }
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

std::string params(const CodeReport& r) {
    return "(" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.delta) + "," +
           std::to_string(r.d_free) + ")";
}

bool has_diagnostic(const CodeRun& run, const std::string& needle) {
    return std::any_of(run.diagnostics.begin(), run.diagnostics.end(),
                       [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

void expect_code(Checker& c, const std::string& name, const std::string& tuple, bool mds) {
    const CodeSpec& spec = fixture(name).spec;
    const CodeRun run = cgc::run(spec);
    c.expect_eq(params(run.analysis.report), tuple, name + " parameters");
    c.expect_eq(run.analysis.report.is_mds, mds, name + " MDS flag");
    c.expect(run.generator == *spec.reference.generator, name + " generator matches printed matrix");
    if (spec.reference.dual) {
        c.expect(run.dual && *run.dual == *spec.reference.dual, name + " dual matches printed matrix");
        c.expect(run.dual && check_dual(run.generator, *run.dual), name + " H·Gᵀ = 0");
    }
}

void criterion_1(Checker& c) {
    const FieldSpec f = FieldSpec::prime(3);
    const RatFn z(Poly::z(f));
    const auto k = [&](int v) { return RatFn(f.from_int(v)); };
    const auto g = Matrix<RatFn>::from_rows({{z + k(1), z + k(2)}}, k(0));
    const auto h = Matrix<RatFn>::from_rows({{(k(2) * (z + k(1))).inverse(), (z + k(2)).inverse()}}, k(0));
    const CodeRun run = cgc::run(fixture("p1-f3").spec);
    c.expect(run.generator == g, "generator (z+1, z+2)");
    c.expect(run.dual && *run.dual == h, "dual (1/(2(z+1)), 1/(z+2))");
    c.expect_eq(params(run.analysis.report), std::string("(2,1,1,4)"), "parameters");
    c.expect(run.analysis.report.is_mds, "MDS");
    c.expect(run.dual && is_zero_matrix(*run.dual * transpose(run.generator)), "H·Gᵀ = 0");
}

void criterion_2(Checker& c) {
    expect_code(c, "p1-f4-a", "(3,2,1,3)", true);
    expect_code(c, "p1-f4-b", "(3,1,1,6)", true);
}

void criterion_3(Checker& c) {
    expect_code(c, "p1-f5-a", "(3,1,2,9)", true);
    expect_code(c, "p1-f5-b", "(4,2,3,8)", true);
    const CodeRun run = cgc::run(fixture("p1-f5-b").spec);
    c.expect_eq(run.analysis.report.singleton_bound, 8, "fifth item bound");
    c.expect_eq(free_distance_oracle(run.analysis.encoder, 7), 8, "fifth item oracle at degree 7");
    c.expect(has_diagnostic(run, "(2,1,3,8)") && has_diagnostic(run, "(4,2,3,8)"), "parameter mismatch diagnostic");
}

void expect_elliptic(Checker& c, const std::string& name, int d, int bound) {
    const CodeSpec& spec = fixture(name).spec;
    const auto& e = std::get<EllipticSpec>(spec.construction);
    for (std::size_t i = 0; i < e.points.size(); ++i)
        c.expect(on_curve(e.curve, e.points[i]), name + " point " + std::to_string(i + 1) + " on curve");
    const CodeRun run = cgc::run(spec);
    c.expect(run.generator == *spec.reference.generator, name + " generator matches printed matrix");
    c.expect_eq(run.analysis.report.d_free, d, name + " free distance");
    c.expect_eq(run.analysis.report.singleton_bound, bound, name + " bound");
    c.expect(!run.analysis.report.is_mds, name + " not MDS");
}

void criterion_4(Checker& c) {
    expect_elliptic(c, "elliptic-1", 2, 3);
    c.expect(!cgc::run(fixture("elliptic-1").spec).analysis.report.input_was_catastrophic, "not catastrophic");
}

void criterion_5(Checker& c) {
    expect_elliptic(c, "elliptic-2", 4, 5);
    const CodeRun run = cgc::run(fixture("elliptic-2").spec);
    const FieldSpec f = FieldSpec::prime(2);
    const Poly z = Poly::z(f);
    c.expect(run.analysis.report.input_was_catastrophic, "raw encoder flagged catastrophic");
    c.expect(run.analysis.input_minor_gcd == z * (z + Poly(f.one())), "minor gcd z(z+1)");
    c.expect(has_diagnostic(run, "catastrophic"), "catastrophic diagnostic");
}

void criterion_6(Checker& c) {
    for (const Fixture& fx : fixtures()) {
        if (!fx.spec.reference.realization) continue;
        const PolyEncoder m = clear_denominators(*fx.spec.reference.generator);
        const Realization& r = *fx.spec.reference.realization;
        std::uint64_t inputs = 1;
        for (int i = 0; i < r.k * 4; ++i) inputs *= r.field().q();
        c.expect(inputs <= 2'000'000, fx.name + " exhaustive at degree 3");
        c.expect(verify(r, m, 3), fx.name + " printed realization");
    }
}

void criterion_7(Checker& c) {
    // (a) duality and dimension on random projective-line specs
    std::mt19937 rng(20240);
    const int orders[] = {3, 4, 5, 7, 8};
    for (int t = 0; t < 100; ++t) {
        const FieldSpec f = field_of_order(orders[t % 5]);
        const P1Spec spec = random_p1_spec(f, 2 + t % 5, rng);
        const auto g = generator_matrix(spec);
        c.expect(rank(g) == static_cast<std::size_t>(spec.k()), "(a) rank of case " + std::to_string(t));
        if (spec.k() < spec.n())
            c.expect(is_zero_matrix(dual_matrix(spec) * transpose(g)), "(a) duality of case " + std::to_string(t));
    }

    // (b) state search against brute force
    const auto agree = [&](const Matrix<RatFn>& g, const std::string& label) {
        const Analysis a = analyze(g);
        const int oracle = free_distance_oracle(a.encoder, a.report.delta + 4);
        c.expect_eq(a.report.d_free, oracle, "(b) " + label);
    };
    for (const Fixture& fx : fixtures()) agree(generator_matrix(fx.spec), fx.name);
    int random_cases = 0;
    for (int t = 0; random_cases < 25; ++t) {
        const FieldSpec f = field_of_order(orders[t % 3]);
        const P1Spec spec = random_p1_spec(f, 2 + t % 3, rng);
        const PolyEncoder m = row_reduce(basic_encoder(clear_denominators(generator_matrix(spec))).encoder);
        std::uint64_t branches = 1;
        for (std::size_t i = 0; i < m.degree() + m.k(); ++i) branches *= f.q();
        if (m.degree() == 0 || branches > 625) continue;
        agree(generator_matrix(spec), "random case " + std::to_string(t));
        ++random_cases;
    }

    // (c) Riemann–Roch dimension of the monomial basis
    for (int r = 2; r <= 12; ++r)
        c.expect(canonical_basis(r).size() == static_cast<std::size_t>(r), "(c) |L(" + std::to_string(r) + "P)|");

    // (d) Smith form postconditions
    for (int t = 0; t < 100; ++t) {
        const FieldSpec f = field_of_order(t % 2 ? 3 : 2);
        const auto m = random_poly_matrix(f, 2, 4, 3, rng);
        const SmithForm sf = smith_form(m);
        const auto d = sf.U * m * sf.V;
        bool ok = determinant(sf.U).degree() == 0 && determinant(sf.V).degree() == 0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                const bool diag = i == j && i < sf.invariant_factors.size();
                ok = ok && d(i, j) == (diag ? sf.invariant_factors[i] : Poly(f));
            }
        for (std::size_t i = 0; i + 1 < sf.invariant_factors.size(); ++i)
            ok = ok && divrem(sf.invariant_factors[i + 1], sf.invariant_factors[i]).second.is_zero();
        for (const Poly& g : sf.invariant_factors) ok = ok && g.is_monic();
        c.expect(ok, "(d) Smith case " + std::to_string(t));
    }

    // (e) field axioms, exhaustively
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25}) {
        const FieldSpec f = field_of_order(q);
        const auto all = f.elements();
        bool ok = all.size() == f.q();
        for (const Fq& a : all) {
            if (!a.is_zero()) ok = ok && a * a.inverse() == f.one() && a.pow(f.q() - 1) == f.one();
            for (const Fq& b : all) {
                ok = ok && a + b == b + a && a * b == b * a;
                for (const Fq& x : all)
                    ok = ok && (a + b) + x == a + (b + x) && (a * b) * x == a * (b * x) && a * (b + x) == a * b + a * x;
            }
        }
        c.expect(ok, "(e) axioms in F_" + std::to_string(q));
    }
}

void criterion_8(Checker& c) {
    for (const Fixture& fx : fixtures())
        c.expect(render_report(fx.spec) == render_report(fx.spec), fx.name + " report bytes");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"F_3 fixture", criterion_1},
        {"F_4 items", criterion_2},
        {"F_5 items and parameter diagnostic", criterion_3},
        {"elliptic example 1", criterion_4},
        {"elliptic example 2", criterion_5},
        {"printed realizations", criterion_6},
        {"property suites", criterion_7},
        {"report determinism", criterion_8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.failures().empty();
        failed += !ok;
        std::printf("criterion %zu %s: %s (%.2fs)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs);
        for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
    }
    return failed ? 1 : 0;
}
