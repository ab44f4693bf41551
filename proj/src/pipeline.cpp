#include "cgc/pipeline.hpp"

#include "cgc/format.hpp"

#include <sstream>

namespace cgc {

namespace {

std::string tuple(int n, int k, int delta, int d) {
    std::ostringstream os;
    os << "(" << n << "," << k << "," << delta << "," << d << ")";
    return os.str();
}

// First differing entry, or empty when equal.
std::string compare(const Matrix<RatFn>& ref, const Matrix<RatFn>& got) {
    if (ref.rows() != got.rows() || ref.cols() != got.cols())
        return "shape " + std::to_string(ref.rows()) + "x" + std::to_string(ref.cols()) + " vs computed " +
               std::to_string(got.rows()) + "x" + std::to_string(got.cols());
    for (std::size_t i = 0; i < ref.rows(); ++i)
        for (std::size_t j = 0; j < ref.cols(); ++j)
            if (!(ref(i, j) == got(i, j)))
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): reference " +
                       to_string(ref(i, j)) + ", computed " + to_string(got(i, j));
    return {};
}

void compare_reference(const CodeSpec& spec, CodeRun& out) {
    const ReferenceValues& ref = spec.reference;
    const CodeReport& r = out.analysis.report;
    auto& diag = out.diagnostics;

    if (ref.generator) {
        const std::string diff = compare(*ref.generator, out.generator);
        diag.push_back(diff.empty() ? "reference generator matrix reproduced"
                                    : "reference generator matrix mismatch: " + diff);
    }
    if (ref.dual && out.dual) {
        const std::string diff = compare(*ref.dual, *out.dual);
        diag.push_back(diff.empty() ? "reference dual matrix reproduced" : "reference dual matrix mismatch: " + diff);
    }
    if (ref.params) {
        const auto& p = *ref.params;
        const std::string printed = tuple(p[0], p[1], p[2], p[3]);
        const std::string computed = tuple(r.n, r.k, r.delta, r.d_free);
        diag.push_back(printed == computed
                           ? "reference parameters (n,k,delta,d)=" + printed + " reproduced"
                           : "reference-parameter mismatch: reference (n,k,delta,d)=" + printed + ", computed " +
                                 computed);
    }
    if (ref.d_free) {
        diag.push_back(*ref.d_free == r.d_free
                           ? "reference free distance " + std::to_string(r.d_free) + " reproduced"
                           : "reference free distance mismatch: reference " + std::to_string(*ref.d_free) +
                                 ", computed " + std::to_string(r.d_free));
    }
    if (ref.max_distance) {
        diag.push_back(*ref.max_distance == r.singleton_bound
                           ? "reference max distance " + std::to_string(r.singleton_bound) + " reproduced"
                           : "reference max distance mismatch: reference " + std::to_string(*ref.max_distance) +
                                 ", computed bound " + std::to_string(r.singleton_bound));
    }
    if (ref.realization) {
        const PolyEncoder target =
            make_encoder(clear_denominators(ref.generator ? *ref.generator : out.generator).entries);
        bool ok = false;
        std::string why;
        try {
            ok = verify(*ref.realization, target, 3);
        } catch (const Error& e) {
            why = std::string(": ") + e.what();
        }
        diag.push_back(ok ? "reference realization reproduces the generator for inputs of degree <= 3"
                          : "reference realization does not reproduce the generator" + why);
    }
}

} // namespace

CodeRun run(const CodeSpec& spec, const ReportRequest& request) {
    Matrix<RatFn> g = generator_matrix(spec);
    std::optional<Matrix<RatFn>> h;
    if (const auto* p1 = std::get_if<P1Spec>(&spec.construction)) {
        if (p1->k() < p1->n()) h = dual_matrix(*p1);
    }

    CodeRun out{g, h, analyze(g), std::nullopt, std::nullopt, {}};
    const CodeReport& r = out.analysis.report;

    const Poly& g_minors = out.analysis.input_minor_gcd;
    if (r.input_was_catastrophic)
        out.diagnostics.push_back("input encoder catastrophic: maximal minor gcd " + to_string(g_minors));
    else if (!g_minors.is_one())
        out.diagnostics.push_back("input encoder not basic: maximal minor gcd " + to_string(g_minors));
    if (!out.dual && spec.is_p1()) out.diagnostics.push_back("dual code is zero: k = n");
    if (!r.is_mds)
        out.diagnostics.push_back("not MDS: free distance " + std::to_string(r.d_free) +
                                  ", max distance for parameters is " + std::to_string(r.singleton_bound));

    const std::optional<int> bound = request.oracle_bound ? request.oracle_bound : spec.options.deg_bound_oracle;
    if (bound) {
        out.oracle_distance = free_distance_oracle(out.analysis.encoder, *bound);
        if (*out.oracle_distance != r.d_free)
            out.diagnostics.push_back("oracle mismatch: degree bound " + std::to_string(*bound) + " gives " +
                                      std::to_string(*out.oracle_distance) + ", state search gives " +
                                      std::to_string(r.d_free));
    }
    if (request.realize || spec.options.emit_realization) out.realization = realize(out.analysis.encoder);

    compare_reference(spec, out);
    return out;
}

Json report_json(const CodeSpec& spec, const CodeRun& run) {
    const auto matrix_block = [](const Matrix<RatFn>& m) {
        Json j;
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        j["entries"] = to_json(m);
        j["display"] = display_json(m);
        return j;
    };

    Json j;
    j["spec"] = to_json(spec);
    j["generator"] = matrix_block(run.generator);
    j["dual"] = run.dual ? matrix_block(*run.dual) : Json(nullptr);

    const PolyEncoder& enc = run.analysis.encoder;
    Json e;
    e["entries"] = to_json(enc.entries);
    e["display"] = display_json(enc.entries);
    e["rowDegrees"] = enc.row_degrees;
    e["isBasic"] = enc.is_basic;
    e["isMinimal"] = enc.is_minimal;
    j["encoder"] = e;

    j["report"] = to_json(run.analysis.report);
    if (run.oracle_distance) j["dFreeOracle"] = *run.oracle_distance;
    if (run.realization) j["realization"] = to_json(*run.realization);
    j["diagnostics"] = run.diagnostics;
    return j;
}

std::string render_report(const CodeSpec& spec, const ReportRequest& request) {
    return report_json(spec, run(spec, request)).dump(2) + "\n";
}

std::vector<CheckResult> verify_checks(const CodeSpec& spec) {
    std::vector<CheckResult> out;
    const Matrix<RatFn> g = generator_matrix(spec);
    const std::size_t k = g.rows(), n = g.cols();
    const std::size_t rg = rank(g);
    out.push_back({"generator_rank", rg == k, "rank " + std::to_string(rg) + ", expected " + std::to_string(k)});

    if (const auto* p1 = std::get_if<P1Spec>(&spec.construction)) {
        if (p1->k() == p1->n()) {
            out.push_back({"dual_nonempty", false, "k = n leaves no dual rows"});
            return out;
        }
        const Matrix<RatFn> h = dual_matrix(*p1);
        const std::size_t rh = rank(h);
        out.push_back({"dual_rank", rh == n - k, "rank " + std::to_string(rh) + ", expected " + std::to_string(n - k)});
        out.push_back({"dual_annihilates_generator", check_dual(g, h), "H * G^T = 0"});
        // G over H need not have rank n: the code and its dual can intersect.
        const std::size_t hull = rg + rh - rank(vstack(g, h));
        out.push_back({"dimensions_sum", rg + rh == n,
                       std::to_string(rg) + " + " + std::to_string(rh) + " = " + std::to_string(n) +
                           ", hull dimension " + std::to_string(hull)});
    } else {
        const auto& e = std::get<EllipticSpec>(spec.construction);
        out.push_back({"curve_smooth", true, "discriminant " + to_string(discriminant(e.curve))});
        bool all_on = true;
        for (const EllipticPoint& p : e.points) all_on = all_on && on_curve(e.curve, p);
        out.push_back({"points_on_curve", all_on, std::to_string(e.points.size()) + " points"});
    }
    return out;
}

} // namespace cgc
