#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace pitm::test {
namespace {

TEST(Report, HeaderAndSections) {
    const ProblemSpec spec = preset(CaseId::I, 8, 8);
    const IterationReport report = solve(spec);
    const std::string text = format_dump(spec, report, DumpKind::Increments);
    EXPECT_EQ(text.rfind("# pitm increments\n", 0), 0u);
    EXPECT_NE(text.find("\n# certified_order: 8\n"), std::string::npos);
    EXPECT_NE(text.find("\n[mu_1]\nt^0: (0)\nt^1: (2*v + v^2)\n"), std::string::npos);
    const std::string totals = format_dump(spec, report, DumpKind::Totals);
    EXPECT_NE(totals.find("[total_8]"), std::string::npos);
    const std::string sdomain = format_dump(spec, report, DumpKind::SDomain);
    EXPECT_NE(sdomain.find("[L[mu_1]]\ns^-1: (0)\ns^-2: (2*v + v^2)\n"), std::string::npos);
}

TEST(Report, CaseTwoFirstIterate) {
    const ProblemSpec spec = preset(CaseId::II, 1, 1);
    const std::string text = format_dump(spec, solve(spec), DumpKind::Increments);
    EXPECT_NE(text.find("\nt^1: (2*v + -3*v^2)\n"), std::string::npos);
}

TEST(Report, CaseThreeInitialValue) {
    const ProblemSpec spec = preset(CaseId::III, 0, 0);
    const std::string text = format_dump(spec, solve(spec), DumpKind::Increments);
    EXPECT_NE(text.find("[mu_0]\nt^0: (1/3*sqrt(6)*v)/(1 + v)\n"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '['), 1);
}

TEST(Report, RoundTrip) {
    for (CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
        ProblemSpec spec = preset(id, 4, 3);
        if (id == CaseId::II) spec.source = series("t^0: 1\nt^2: v^2", spec.context, 4);
        const IterationReport report = solve(spec);
        for (DumpKind kind : {DumpKind::Increments, DumpKind::Totals}) {
            const ParsedDump parsed = parse_dump(format_dump(spec, report, kind));
            EXPECT_EQ(parsed.kind, kind);
            EXPECT_EQ(parsed.spec.a, spec.a);
            EXPECT_EQ(parsed.spec.b, spec.b);
            EXPECT_EQ(parsed.spec.c, spec.c);
            EXPECT_EQ(parsed.spec.n, spec.n);
            EXPECT_EQ(parsed.spec.context, spec.context);
            EXPECT_EQ(parsed.spec.phi, spec.phi);
            EXPECT_EQ(parsed.spec.source, spec.source);
            EXPECT_EQ(parsed.spec.order, spec.order);
            EXPECT_EQ(parsed.spec.iterations, spec.iterations);
            EXPECT_EQ(parsed.certified_order, report.certified_order);
            EXPECT_EQ(parsed.truncation_loss, report.truncation_loss);
            EXPECT_EQ(parsed.series, kind == DumpKind::Increments ? report.increments : report.totals);
        }
    }
}

TEST(Report, ParseErrorsCarryLineNumbers) {
    try {
        parse_dump("# pitm totals\n# a: x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

VerifyOptions quick_options() {
    VerifyOptions options;
    options.grid.nx = 201;
    options.grid.t_max = 0.1;
    options.grid.nt = 201;
    options.grid.substeps = stable_substeps(options.grid, 1.0);
    return options;
}

TEST(Verify, CaseOnePasses) {
    const ProblemSpec spec = preset(CaseId::I, 8, 8);
    const VerifyResult result = verify(spec, quick_options());
    EXPECT_TRUE(result.passed());
    ASSERT_TRUE(result.oracle.has_value());
    EXPECT_EQ(result.oracle->through, 8);
    EXPECT_TRUE(result.printed_defects.empty());
}

TEST(Verify, PublishedDiffCaseOne) {
    const VerifyResult result = verify(preset(CaseId::I, 8, 8), quick_options());
    const auto has = [&](int order, const std::string& term, const std::string& printed, const std::string& computed) {
        return std::any_of(result.printed_diff.begin(), result.printed_diff.end(), [&](const PrintedDiffRow& r) {
            return r.order == order && r.term == term && r.printed == printed && r.computed == computed;
        });
    };
    EXPECT_TRUE(has(2, "v^2", "1", "3"));
    EXPECT_TRUE(has(2, "v^3", "0", "1"));
    for (const auto& row : result.printed_diff) EXPECT_GE(row.order, 2);
}

TEST(Verify, PublishedDefectCaseTwo) {
    const VerifyResult result = verify(preset(CaseId::II, 8, 8), quick_options());
    EXPECT_TRUE(result.passed());
    ASSERT_EQ(result.printed_defects.size(), 1u);
    EXPECT_NE(result.printed_defects[0].find("t = 0"), std::string::npos);
    const std::string text = format_verify_report(preset(CaseId::II, 8, 8), result, quick_options());
    EXPECT_NE(text.find("DEFECT"), std::string::npos);
    EXPECT_NE(text.find("result: PASS"), std::string::npos);
}

TEST(Verify, CaseThreeShortHorizon) {
    const ProblemSpec spec = preset(CaseId::III, 6, 6);
    VerifyOptions options = quick_options();
    options.grid.nx = 1001;
    options.grid.nt = 1001;
    options.grid.substeps = stable_substeps(options.grid, 1.0);
    const VerifyResult result = verify(spec, options);
    EXPECT_TRUE(result.passed()) << (result.first_failure() ? result.first_failure()->detail : "");
    ASSERT_TRUE(result.series_vs_rk4.has_value());
    EXPECT_LE(result.series_vs_rk4->max_abs, 1e-6);
}

TEST(Verify, CorruptedGoldenFails) {
    const ProblemSpec spec = preset(CaseId::I, 8, 8);
    VerifyOptions options = quick_options();
    TimeSeries golden = exact_taylor_case1(8);
    golden.set(3, elem("5/3*v + 14/3*v^2 + 4*v^3 + v^4"));
    options.golden = golden;
    const VerifyResult result = verify(spec, options);
    ASSERT_FALSE(result.passed());
    EXPECT_EQ(result.first_failure()->name, "golden");
    EXPECT_NE(result.first_failure()->detail.find("t^3"), std::string::npos);
    EXPECT_NE(result.first_failure()->detail.find("v^1"), std::string::npos);
    options.golden = exact_taylor_case1(8);
    EXPECT_TRUE(verify(spec, options).passed());
}

TEST(Verify, OracleAgreementReportsFirstMismatch) {
    TimeSeries u = exact_taylor_case1(5);
    EXPECT_EQ(oracle_agreement(u, exact_taylor_case1(5)).through, 5);
    u.set(2, elem("v"));
    const OracleAgreement agreement = oracle_agreement(u, exact_taylor_case1(5));
    EXPECT_EQ(agreement.through, 1);
    EXPECT_EQ(agreement.first_mismatch, 2);
}

}  // namespace
}  // namespace pitm::test
