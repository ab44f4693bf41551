#include "cgc/error.hpp"
#include "cgc/fixtures.hpp"
#include "cgc/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cgc;

namespace {

Json spec_json(const std::string& name) { return to_json(fixture(name).spec); }

std::string parse_error_key(const Json& j) {
    try {
        parse_spec(j);
    } catch (const ParseError& e) {
        return e.key();
    }
    ADD_FAILURE() << "no ParseError";
    return {};
}

bool has_diagnostic(const CodeRun& run, const std::string& needle) {
    return std::any_of(run.diagnostics.begin(), run.diagnostics.end(),
                       [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

} // namespace

TEST(Spec, RoundTrip) {
    for (const Fixture& fx : fixtures()) {
        const Json once = to_json(fx.spec);
        const Json twice = to_json(parse_spec(once));
        EXPECT_EQ(once.dump(), twice.dump()) << fx.name;
        const Json report = report_json(fx.spec, run(fx.spec));
        EXPECT_EQ(to_json(parse_spec(report["spec"])).dump(), once.dump()) << fx.name;
    }
}

TEST(Spec, ExplicitPointsEquivalentToFamily) {
    Json j = spec_json("p1-f4-a");
    j.erase("family");
    // z+1, αz+α², α²z+α
    j["points"] = Json::array({Json::array({1, 1}), Json::array({Json::array({1, 1}), Json::array({0, 1})}),
                              Json::array({Json::array({0, 1}), Json::array({1, 1})})});
    const CodeSpec s = parse_spec(j);
    EXPECT_EQ(generator_matrix(s), generator_matrix(fixture("p1-f4-a").spec));
}

TEST(Spec, GammaDefaultsToFullBasis) {
    Json j = spec_json("elliptic-1");
    j.erase("gamma");
    j["r"] = 3;
    const CodeSpec s = parse_spec(j);
    EXPECT_FALSE(s.gamma_given);
    EXPECT_EQ(std::get<EllipticSpec>(s.construction).gamma, canonical_basis(3));
}

TEST(Spec, ParseErrorsNameTheKey) {
    Json j = spec_json("p1-f3");
    j.erase("r");
    EXPECT_EQ(parse_error_key(j), "r");

    j = spec_json("p1-f3");
    j["construction"] = "hyperbolic";
    EXPECT_EQ(parse_error_key(j), "construction");

    j = spec_json("p1-f3");
    j["family"]["a"] = 7;
    EXPECT_EQ(parse_error_key(j), "family.a");

    j = spec_json("elliptic-1");
    j["points"][1]["y"] = "z+1";
    EXPECT_NE(parse_error_key(j).find("points[1]"), std::string::npos);

    j = spec_json("p1-f3");
    j["options"] = {{"emitRealization", 1}};
    EXPECT_EQ(parse_error_key(j), "options.emitRealization");
}

TEST(Spec, MathematicalErrors) {
    Json j = spec_json("p1-f4-a");
    j["field"]["modulus"] = Json::array({1, 0, 1});
    EXPECT_THROW(parse_spec(j), Error);

    j = spec_json("elliptic-1");
    j["points"][0]["x"] = Json::array({1});
    try {
        run(parse_spec(j));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PointNotOnCurve);
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    }
}

TEST(Report, F3) {
    const CodeSpec& s = fixture("p1-f3").spec;
    const Json r = report_json(s, run(s));
    EXPECT_EQ(r["generator"]["display"].dump(), R"([["z+1","z+2"]])");
    EXPECT_EQ(r["dual"]["display"].dump(), R"j([["2/(z+1)","1/(z+2)"]])j");
    EXPECT_EQ(r["report"]["n"], 2);
    EXPECT_EQ(r["report"]["k"], 1);
    EXPECT_EQ(r["report"]["delta"], 1);
    EXPECT_EQ(r["report"]["dFree"], 4);
    EXPECT_EQ(r["report"]["isMds"], true);
}

TEST(Report, Elliptic1) {
    const CodeSpec& s = fixture("elliptic-1").spec;
    const CodeRun c = run(s);
    EXPECT_TRUE(c.analysis.report.d_free == 2 && !c.analysis.report.is_mds);
    EXPECT_TRUE(has_diagnostic(c, "max distance for parameters is 3"));
    EXPECT_TRUE(report_json(s, c)["dual"].is_null());
}

TEST(Report, F5FifthItemMismatch) {
    const CodeRun c = run(fixture("p1-f5-b").spec);
    EXPECT_TRUE(has_diagnostic(c, "(2,1,3,8)"));
    EXPECT_TRUE(has_diagnostic(c, "(4,2,3,8)"));
}

TEST(Report, RealizationOnRequest) {
    const CodeSpec& s = fixture("p1-f5-a").spec;
    EXPECT_FALSE(run(s).realization.has_value());
    const CodeRun c = run(s, {true, std::nullopt});
    ASSERT_TRUE(c.realization.has_value());
    EXPECT_EQ(c.realization->delta, 2);
    const CodeRun o = run(s, {false, 3});
    EXPECT_EQ(o.oracle_distance, 9);
}

TEST(Report, Deterministic) {
    for (const Fixture& fx : fixtures())
        EXPECT_EQ(render_report(fx.spec, {true, 2}), render_report(fx.spec, {true, 2})) << fx.name;
}

TEST(VerifyChecks, PassOnFixtures) {
    for (const char* name : {"p1-f4-a", "p1-f5-a", "elliptic-2"}) {
        for (const CheckResult& c : verify_checks(fixture(name).spec)) EXPECT_TRUE(c.passed) << name << " " << c.name;
    }
}

TEST(VerifyChecks, DuplicatedPointThrows) {
    Json j = spec_json("p1-f4-a");
    j.erase("family");
    j["points"] = Json::array({Json::array({1, 1}), Json::array({1, 1}), Json::array({0, 1})});
    try {
        verify_checks(parse_spec(j));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoints);
    }
}
