#pragma once

#include "cgc/spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgc {

struct ReportRequest {
    bool realize = false;
    std::optional<int> oracle_bound;
};

/// Everything the report command computes, before serialization.
struct CodeRun {
    Matrix<RatFn> generator;
    std::optional<Matrix<RatFn>> dual;
    Analysis analysis;
    std::optional<int> oracle_distance;
    std::optional<Realization> realization;
    std::vector<std::string> diagnostics;
};

/// Construct, dualize (projective line only), normalize and analyze.
/// Request flags are merged with the spec's own options.
CodeRun run(const CodeSpec& spec, const ReportRequest& request = {});

/// Deterministic report tree: spec echo, matrices, encoder, parameters,
/// optional realization and diagnostics.
Json report_json(const CodeSpec& spec, const CodeRun& run);

/// report_json dumped with two-space indentation and a trailing newline.
std::string render_report(const CodeSpec& spec, const ReportRequest& request = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Structural checks: ranks, duality, curve membership.
std::vector<CheckResult> verify_checks(const CodeSpec& spec);

} // namespace cgc
