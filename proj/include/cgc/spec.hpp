#pragma once

#include "cgc/goppa_elliptic.hpp"
#include "cgc/goppa_p1.hpp"
#include "cgc/io.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>

namespace cgc {

/// a^{i-1}z + b^{i-1} point family, kept so reports echo what was written.
struct PointFamily {
    Fq a;
    Fq b;
    int n;
};

struct SpecOptions {
    std::optional<int> deg_bound_oracle;
    bool emit_realization = false;
};

/// Published values a spec can be compared against. Every field is optional;
/// mismatches become report diagnostics, never silent corrections.
struct ReferenceValues {
    std::optional<std::array<int, 4>> params; // (n, k, delta, d)
    std::optional<int> max_distance;
    std::optional<int> d_free;
    std::optional<Matrix<RatFn>> generator;
    std::optional<Matrix<RatFn>> dual;
    std::optional<Realization> realization;
};

/// Parsed spec file: exactly one construction plus options.
struct CodeSpec {
    std::string name;
    std::variant<P1Spec, EllipticSpec> construction;
    std::optional<PointFamily> family;
    bool gamma_given = true;
    SpecOptions options;
    ReferenceValues reference;

    const FieldSpec& field() const;
    bool is_p1() const noexcept { return std::holds_alternative<P1Spec>(construction); }
};

/// Throws ParseError naming the offending key, or Error for mathematically
/// invalid fields (e.g. a reducible modulus).
CodeSpec parse_spec(const Json& j);

/// Canonical form; parse_spec(to_json(s)) is equivalent to s.
Json to_json(const CodeSpec& s);

/// Generator matrix of whichever construction the spec holds.
Matrix<RatFn> generator_matrix(const CodeSpec& s);

} // namespace cgc
