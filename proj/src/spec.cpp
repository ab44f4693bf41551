#include "cgc/spec.hpp"

namespace cgc {

namespace {

int get_int(const Json& j, const char* name, const std::string& key) {
    const std::string path = key.empty() ? std::string(name) : key + "." + name;
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(path, "missing key");
    if (!it->is_number_integer()) throw ParseError(path, "expected an integer");
    return it->get<int>();
}

std::string idx(const std::string& key, std::size_t i) { return key + "[" + std::to_string(i) + "]"; }

P1Spec parse_p1(const Json& j, const FieldSpec& f, std::optional<PointFamily>& family) {
    P1Spec spec{f, {}, get_int(j, "r", ""), get_int(j, "s", "")};
    const bool has_points = j.contains("points");
    const bool has_family = j.contains("family");
    if (has_points == has_family) throw ParseError("points", "give exactly one of 'points' or 'family'");
    if (has_points) {
        const Json& pts = j["points"];
        if (!pts.is_array()) throw ParseError("points", "expected a list");
        for (std::size_t i = 0; i < pts.size(); ++i) spec.alphas.push_back(ratfn_from_json(pts[i], f, idx("points", i)));
    } else {
        const Json& fam = j["family"];
        if (!fam.is_object()) throw ParseError("family", "expected {a, b, n}");
        if (!fam.contains("a")) throw ParseError("family.a", "missing key");
        if (!fam.contains("b")) throw ParseError("family.b", "missing key");
        PointFamily pf{fq_from_json(fam["a"], f, "family.a"), fq_from_json(fam["b"], f, "family.b"),
                       get_int(fam, "n", "family")};
        spec.alphas = standard_points(pf.a, pf.b, pf.n);
        family = pf;
    }
    return spec;
}

EllipticSpec parse_elliptic(const Json& j, const FieldSpec& f, bool& gamma_given) {
    if (!j.contains("curve")) throw ParseError("curve", "missing key");
    const Json& c = j["curve"];
    if (!c.is_object()) throw ParseError("curve", "expected an object");
    const auto coeff = [&](const char* name) {
        return c.contains(name) ? ratfn_from_json(c[name], f, std::string("curve.") + name) : RatFn::zero(f);
    };
    EllipticSpec spec{f, {coeff("a1"), coeff("a2"), coeff("a3"), coeff("a4"), coeff("a6")}, {}, get_int(j, "r", ""), {}};

    if (!j.contains("points")) throw ParseError("points", "missing key");
    const Json& pts = j["points"];
    if (!pts.is_array()) throw ParseError("points", "expected a list");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Json& p = pts[i];
        if (!p.is_object() || !p.contains("x") || !p.contains("y")) throw ParseError(idx("points", i), "expected {x, y}");
        spec.points.push_back({ratfn_from_json(p["x"], f, idx("points", i) + ".x"),
                               ratfn_from_json(p["y"], f, idx("points", i) + ".y")});
    }

    gamma_given = j.contains("gamma");
    if (gamma_given) {
        const Json& g = j["gamma"];
        if (!g.is_array()) throw ParseError("gamma", "expected a list of [i, j] pairs");
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i].is_array() || g[i].size() != 2 || !g[i][0].is_number_integer() || !g[i][1].is_number_integer())
                throw ParseError(idx("gamma", i), "expected [i, j]");
            spec.gamma.push_back({g[i][0].get<int>(), g[i][1].get<int>()});
        }
    } else {
        spec.gamma = canonical_basis(spec.r);
    }
    return spec;
}

ReferenceValues parse_reference(const Json& j, const FieldSpec& f) {
    ReferenceValues ref;
    if (!j.is_object()) throw ParseError("reference", "expected an object");
    if (j.contains("params")) {
        const Json& p = j["params"];
        if (!p.is_array() || p.size() != 4) throw ParseError("reference.params", "expected [n, k, delta, d]");
        std::array<int, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (!p[i].is_number_integer()) throw ParseError(idx("reference.params", i), "expected an integer");
            v[i] = p[i].get<int>();
        }
        ref.params = v;
    }
    if (j.contains("maxDistance")) ref.max_distance = get_int(j, "maxDistance", "reference");
    if (j.contains("dFree")) ref.d_free = get_int(j, "dFree", "reference");
    if (j.contains("generator")) ref.generator = ratfn_matrix_from_json(j["generator"], f, "reference.generator");
    if (j.contains("dual")) ref.dual = ratfn_matrix_from_json(j["dual"], f, "reference.dual");
    if (j.contains("realization"))
        ref.realization = realization_from_json(j["realization"], f, "reference.realization");
    return ref;
}

} // namespace

const FieldSpec& CodeSpec::field() const {
    return std::visit([](const auto& c) -> const FieldSpec& { return c.field; }, construction);
}

CodeSpec parse_spec(const Json& j) {
    if (!j.is_object()) throw ParseError("<root>", "expected an object");
    if (!j.contains("construction")) throw ParseError("construction", "missing key");
    if (!j["construction"].is_string()) throw ParseError("construction", "expected \"p1\" or \"elliptic\"");
    const std::string kind = j["construction"].get<std::string>();
    if (!j.contains("field")) throw ParseError("field", "missing key");
    const FieldSpec f = field_from_json(j["field"], "field");

    std::optional<PointFamily> family;
    bool gamma_given = true;
    CodeSpec out{"", P1Spec{f, {}, 0, 0}, std::nullopt, true, {}, {}};
    if (kind == "p1") {
        out.construction = parse_p1(j, f, family);
    } else if (kind == "elliptic") {
        out.construction = parse_elliptic(j, f, gamma_given);
    } else {
        throw ParseError("construction", "unknown construction '" + kind + "'");
    }
    out.family = family;
    out.gamma_given = gamma_given;

    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("name", "expected a string");
        out.name = j["name"].get<std::string>();
    }
    if (j.contains("options")) {
        const Json& o = j["options"];
        if (!o.is_object()) throw ParseError("options", "expected an object");
        if (o.contains("degBoundOracle")) out.options.deg_bound_oracle = get_int(o, "degBoundOracle", "options");
        if (o.contains("emitRealization")) {
            if (!o["emitRealization"].is_boolean()) throw ParseError("options.emitRealization", "expected a boolean");
            out.options.emit_realization = o["emitRealization"].get<bool>();
        }
    }
    if (j.contains("reference")) out.reference = parse_reference(j["reference"], f);
    return out;
}

Json to_json(const CodeSpec& s) {
    Json j;
    if (!s.name.empty()) j["name"] = s.name;
    j["construction"] = s.is_p1() ? "p1" : "elliptic";
    j["field"] = to_json(s.field());

    if (const auto* p1 = std::get_if<P1Spec>(&s.construction)) {
        if (s.family) {
            Json fam;
            fam["a"] = to_json(s.family->a);
            fam["b"] = to_json(s.family->b);
            fam["n"] = s.family->n;
            j["family"] = fam;
        } else {
            Json pts = Json::array();
            for (const RatFn& a : p1->alphas) pts.push_back(to_json(a));
            j["points"] = pts;
        }
        j["r"] = p1->r;
        j["s"] = p1->s;
    } else {
        const auto& e = std::get<EllipticSpec>(s.construction);
        Json curve;
        curve["a1"] = to_json(e.curve.a1);
        curve["a2"] = to_json(e.curve.a2);
        curve["a3"] = to_json(e.curve.a3);
        curve["a4"] = to_json(e.curve.a4);
        curve["a6"] = to_json(e.curve.a6);
        j["curve"] = curve;
        Json pts = Json::array();
        for (const EllipticPoint& p : e.points) {
            Json pj;
            pj["x"] = to_json(p.x);
            pj["y"] = to_json(p.y);
            pts.push_back(pj);
        }
        j["points"] = pts;
        j["r"] = e.r;
        if (s.gamma_given) {
            Json g = Json::array();
            for (const Monomial& m : e.gamma) g.push_back({m.x_power, m.y_power});
            j["gamma"] = g;
        }
    }

    Json opts = Json::object();
    if (s.options.deg_bound_oracle) opts["degBoundOracle"] = *s.options.deg_bound_oracle;
    if (s.options.emit_realization) opts["emitRealization"] = true;
    if (!opts.empty()) j["options"] = opts;

    const ReferenceValues& r = s.reference;
    Json ref = Json::object();
    if (r.params) ref["params"] = *r.params;
    if (r.max_distance) ref["maxDistance"] = *r.max_distance;
    if (r.d_free) ref["dFree"] = *r.d_free;
    if (r.generator) ref["generator"] = to_json(*r.generator);
    if (r.dual) ref["dual"] = to_json(*r.dual);
    if (r.realization) ref["realization"] = to_json(*r.realization);
    if (!ref.empty()) j["reference"] = ref;
    return j;
}

Matrix<RatFn> generator_matrix(const CodeSpec& s) {
    return std::visit([](const auto& c) { return generator_matrix(c); }, s.construction);
}

} // namespace cgc
