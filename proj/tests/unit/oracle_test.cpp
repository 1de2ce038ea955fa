#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "support.hpp"

namespace pitm::test {
namespace {

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(PITM_GOLDEN_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST(Oracle, SeriesExp) {
    EXPECT_EQ(series_exp(Scalar(0L), kConst, 3), TimeSeries::constant(elem("1"), 3));
    EXPECT_EQ(series_exp(Scalar(2L), kConst, 3), series("t^0: 1\nt^1: 2\nt^2: 2\nt^3: 4/3", kConst, 3));
    EXPECT_EQ(series_exp(Scalar(3L), kConst, 2), series("t^0: 1\nt^1: 3\nt^2: 9/2", kConst, 2));
}

TEST(Oracle, SeriesDiv) {
    const TimeSeries one = TimeSeries::constant(elem("1"), 4);
    const TimeSeries geometric = series_div(one, series("t^0: 1\nt^1: -1", kConst, 4));
    EXPECT_EQ(geometric, series("t^0: 1\nt^1: 1\nt^2: 1\nt^3: 1\nt^4: 1", kConst, 4));
    Random rnd(51);
    const TimeSeries u = rnd.rational_series(kExp6, 4);
    EXPECT_EQ(series_div(u, TimeSeries::constant(RingElement(Scalar(1L, 6), kExp6), 4)), u);
    EXPECT_THROW(series_div(one, TimeSeries::monomial(elem("1"), 1, 4)), SingularDivision);
}

TEST(Oracle, SeriesDivInvertsProduct) {
    Random rnd(52);
    for (const Context& ctx : {kConst, kExp6}) {
        for (int i = 0; i < 100; ++i) {
            const int n = rnd.integer(0, 6);
            const TimeSeries q = rnd.rational_series(ctx, n);
            TimeSeries den = rnd.rational_series(ctx, n);
            den.set(0, rnd.nonzero_element(ctx, 1));
            ASSERT_EQ(series_div(q * den, den), q);
        }
    }
}

TEST(Oracle, LowOrderCoefficients) {
    const TimeSeries one = exact_taylor_case1(2);
    EXPECT_EQ(one[0], elem("v"));
    EXPECT_EQ(one[1], elem("2*v + v^2"));
    EXPECT_EQ(one[2], elem("2*v + 3*v^2 + v^3"));
    const TimeSeries two = exact_taylor_case2(2);
    EXPECT_EQ(two[0], elem("v"));
    EXPECT_EQ(two[1], elem("2*v - 3*v^2"));
    EXPECT_EQ(two[2], elem("2*v - 9*v^2 + 9*v^3"));
    const TimeSeries three = exact_taylor_case3(1);
    EXPECT_EQ(three[0], elem("sqrt(6)/3*v/(1 + v)", kExp6));
    EXPECT_EQ(three[1], elem("3*sqrt(6)/3*v/(1 + v)^2", kExp6));
}

TEST(Oracle, MatchesIndependentOracleFiles) {
    EXPECT_EQ(to_string(exact_taylor_case1(8)), read_golden("caseI_taylor_N8.txt"));
    EXPECT_EQ(to_string(exact_taylor_case2(8)), read_golden("caseII_taylor_N8.txt"));
    EXPECT_EQ(to_string(exact_taylor_case3(6)), read_golden("caseIII_taylor_N6.txt"));
}

TEST(Oracle, ExactSeriesHaveZeroResidual) {
    for (CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
        const int n = id == CaseId::III ? 6 : 8;
        EXPECT_TRUE(residual(exact_taylor(id, n), preset(id, n, n)).is_zero()) << case_name(id);
    }
}

TEST(Oracle, PublishedCaseTwoFormFailsInitialCondition) {
    const auto printed = printed_closed_form(CaseId::II, 2);
    ASSERT_TRUE(printed.has_value());
    EXPECT_EQ((*printed)[0], elem("-v"));
    EXPECT_EQ(exact_taylor_case2(2)[0], elem("v"));
    const auto one = printed_closed_form(CaseId::I, 4);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(*one, exact_taylor_case1(4));
    EXPECT_FALSE(printed_closed_form(CaseId::III, 2).has_value());
}

TEST(Oracle, ExactValues) {
    EXPECT_NEAR(exact_value(CaseId::III, 0.0, 0.0, 0.0), std::sqrt(2.0 / 3.0) / 2, 1e-15);
    EXPECT_DOUBLE_EQ(exact_value(CaseId::I, 3.0, 0.0, 0.1), 0.1);
    const double e = std::exp(0.4);
    EXPECT_NEAR(exact_value(CaseId::II, 0.0, 0.2, 0.1), 0.2 * e / (2 + 0.3 * (e - 1)), 1e-15);
}

TEST(Rk4, CaseOneScalarOde) {
    const ProblemSpec spec = preset(CaseId::I, 8, 8);
    GridParams grid;
    grid.t_max = 0.1;
    grid.nt = 101;
    const GridSolution sol = rk4_reference(spec, grid, 0.1);
    ASSERT_EQ(sol.x_grid.size(), 1u);
    EXPECT_NEAR(sol.value(0, 100), exact_value(CaseId::I, 0.0, 0.1, 0.1), 1e-8);
}

double case_one_error(int nt) {
    const ProblemSpec spec = preset(CaseId::I, 8, 8);
    GridParams grid;
    grid.t_max = 0.5;
    grid.nt = nt;
    const GridSolution sol = rk4_reference(spec, grid, 0.1);
    return compare(sol, [](double x, double t) { return exact_value(CaseId::I, x, t, 0.1); }, 0.5).max_abs;
}

TEST(Rk4, FourthOrderConvergence) {
    const double coarse = case_one_error(11);
    const double fine = case_one_error(21);
    EXPECT_GT(coarse, 1e-13);
    EXPECT_GE(coarse / fine, 12.0);
    EXPECT_LE(coarse / fine, 20.0);
}

TEST(Rk4, SourceTermIsApplied) {
    // u_t = -u + 1 + 2t, u(0) = v: u = 2t - 1 + (v + 1) e^{-t}
    ProblemSpec spec;
    spec.b = -1;
    spec.context = kConst;
    spec.phi = elem("v");
    spec.source = series("t^0: 1\nt^1: 2", kConst, 1);
    spec.order = 1;
    spec.iterations = 1;
    GridParams grid;
    grid.t_max = 0.5;
    grid.nt = 51;
    const GridSolution sol = rk4_reference(spec, grid, 0.3);
    EXPECT_NEAR(sol.value(0, 50), 2 * 0.5 - 1 + 1.3 * std::exp(-0.5), 1e-10);
}

TEST(Rk4, ZeroInitialValueStaysZero) {
    ProblemSpec spec = preset(CaseId::III, 2, 2);
    spec.phi = RingElement(kExp6);
    GridParams grid;
    grid.nx = 51;
    grid.t_max = 0.05;
    grid.nt = 11;
    grid.substeps = stable_substeps(grid, 1.0);
    const GridSolution sol = rk4_reference(spec, grid, 0.0, [](double, double) { return 0.0; });
    for (double value : sol.values) EXPECT_EQ(value, 0.0);
}

TEST(Rk4, StabilityBoundEnforced) {
    const ProblemSpec spec = preset(CaseId::III, 2, 2);
    GridParams grid;
    grid.nx = 1001;
    grid.t_max = 0.2;
    grid.nt = 2001;
    const auto wave = [](double x, double t) { return exact_value(CaseId::III, x, t, 0.0); };
    EXPECT_THROW(rk4_reference(spec, grid, 0.0, wave), ConfigError);
    EXPECT_EQ(stable_substeps(grid, 1.0), 3);
    grid.nx = 2;
    EXPECT_THROW(rk4_reference(spec, grid, 0.0, wave), ConfigError);
    grid.nx = 101;
    EXPECT_THROW(rk4_reference(spec, grid, 0.0), ConfigError);
}

TEST(Rk4, CaseThreeMatchesTravelingWave) {
    const ProblemSpec spec = preset(CaseId::III, 6, 6);
    GridParams grid;
    grid.nx = 1001;
    grid.t_max = 0.2;
    grid.nt = 2001;
    grid.substeps = stable_substeps(grid, 1.0);
    const auto wave = [](double x, double t) { return exact_value(CaseId::III, x, t, 0.0); };
    const GridSolution sol = rk4_reference(spec, grid, 0.0, wave);
    EXPECT_LE(compare(sol, wave, 0.2).max_abs, 1e-6);
}

TEST(Compare, CaseOneSeriesAgainstRk4) {
    const ProblemSpec spec = preset(CaseId::I, 10, 10);
    GridParams grid;
    grid.t_max = 0.2;
    grid.nt = 201;
    const GridSolution sol = rk4_reference(spec, grid, 0.1);
    EXPECT_LE(compare(exact_taylor_case1(10), sol, 0.1, 0.2).max_abs, 1e-6);
}

TEST(Compare, IdenticalAndZero) {
    const TimeSeries u = exact_taylor_case2(4);
    GridSolution grid;
    grid.x_grid = {0.0};
    for (int j = 0; j <= 10; ++j) grid.t_grid.push_back(0.02 * j);
    double peak = 0.0;
    for (double t : grid.t_grid) {
        grid.values.push_back(eval_numeric(u, 0.0, t, 0.3));
        peak = std::max(peak, std::abs(grid.values.back()));
    }
    EXPECT_EQ(compare(u, grid, 0.3, 1.0).max_abs, 0.0);
    const CompareReport zero = compare(TimeSeries(kConst, 4), grid, 0.3, 1.0);
    EXPECT_EQ(zero.max_abs, peak);
    EXPECT_EQ(zero.points, 11u);
    EXPECT_EQ(compare(u, grid, 0.3, 0.05).points, 3u);
}

TEST(Csv, Layout) {
    GridSolution grid;
    grid.x_grid = {0.0, 0.5};
    grid.t_grid = {0.0, 1.0};
    grid.values = {1.0, 2.0, 0.1, 4.0};
    std::ostringstream out;
    write_csv(out, grid);
    EXPECT_EQ(out.str(), "x,t,u\n0,0,1\n0.5,0,2\n0,1,0.10000000000000001\n0.5,1,4\n");
}

}  // namespace
}  // namespace pitm::test
