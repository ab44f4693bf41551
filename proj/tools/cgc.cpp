// cgc: construct and analyze convolutional Goppa codes from spec files.

#include "cgc/fixtures.hpp"
#include "cgc/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParseError = 2, kValidationError = 3 };

bool use_color() {
    const char* env = std::getenv("CGC_COLOR");
    if (env && std::string(env) == "0") return false;
    return isatty(STDOUT_FILENO);
}

std::string status(bool passed) {
    if (!use_color()) return passed ? "PASS" : "FAIL";
    return passed ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

cgc::CodeSpec load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cgc::ParseError(path, "cannot open file");
    cgc::Json j;
    try {
        j = cgc::Json::parse(in);
    } catch (const cgc::Json::parse_error& e) {
        throw cgc::ParseError(path, e.what());
    }
    return cgc::parse_spec(j);
}

int cmd_report(const std::string& path, const std::string& out_path, bool realize, std::optional<int> oracle) {
    const cgc::CodeSpec spec = load(path);
    const std::string text = cgc::render_report(spec, {realize, oracle});
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw cgc::ParseError(out_path, "cannot write file");
        out << text;
    }
    return kOk;
}

int cmd_verify(const std::string& path) {
    const cgc::CodeSpec spec = load(path);
    bool all = true;
    for (const auto& c : cgc::verify_checks(spec)) {
        std::cout << c.name << ": " << status(c.passed) << " (" << c.detail << ")\n";
        all = all && c.passed;
    }
    return all ? kOk : kCheckFailed;
}

int cmd_freedist(const std::string& path, std::optional<int> oracle) {
    const cgc::CodeSpec spec = load(path);
    const cgc::Analysis a = cgc::analyze(cgc::generator_matrix(spec));
    const int d = a.report.d_free;
    if (!oracle) {
        std::cout << d << "\n";
        return kOk;
    }
    const int od = cgc::free_distance_oracle(a.encoder, *oracle);
    std::cout << d << " " << od << "\n";
    if (od != d) {
        std::cerr << "oracle mismatch: state search " << d << ", brute force " << od << "\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_examples(const std::string& dir) {
    if (dir.empty()) {
        cgc::Json all = cgc::Json::array();
        for (const auto& fx : cgc::fixtures()) all.push_back(cgc::to_json(fx.spec));
        std::cout << all.dump(2) << "\n";
        return kOk;
    }
    std::filesystem::create_directories(dir);
    for (const auto& fx : cgc::fixtures()) {
        const auto file = std::filesystem::path(dir) / (fx.name + ".json");
        std::ofstream out(file, std::ios::binary);
        if (!out) throw cgc::ParseError(file.string(), "cannot write file");
        out << cgc::to_json(fx.spec).dump(2) << "\n";
        std::cout << file.string() << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convolutional Goppa code construction and analysis"};
    app.require_subcommand(1);

    std::string path, out_path, dir;
    bool realize = false;
    std::optional<int> oracle;

    auto* report = app.add_subcommand("report", "Construct the code and print its full JSON report");
    report->add_option("spec", path, "Spec file")->required();
    report->add_option("--out", out_path, "Write the report to this file instead of stdout");
    report->add_flag("--realize", realize, "Include the (A,B,C,D) state-space realization");
    report->add_option("--oracle", oracle, "Also run the brute-force distance oracle with this input degree bound");

    auto* verify = app.add_subcommand("verify", "Check ranks and H*G^T = 0");
    verify->add_option("spec", path, "Spec file")->required();

    auto* freedist = app.add_subcommand("freedist", "Print the free distance");
    freedist->add_option("spec", path, "Spec file")->required();
    freedist->add_option("--oracle", oracle, "Cross-check against brute force with this input degree bound");

    auto* examples = app.add_subcommand("examples", "Emit the built-in worked examples as spec files");
    examples->add_option("--dir", dir, "Write one <name>.json per example into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParseError;
    }

    try {
        if (*report) return cmd_report(path, out_path, realize, oracle);
        if (*verify) return cmd_verify(path);
        if (*freedist) return cmd_freedist(path, oracle);
        if (*examples) return cmd_examples(dir);
    } catch (const cgc::ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return kParseError;
    } catch (const cgc::Error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    }
    return kOk;
}
