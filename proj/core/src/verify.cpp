#include "pitm/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "pitm/numeric.hpp"
#include "pitm/oracle.hpp"
#include "pitm/report.hpp"
#include "pitm/text.hpp"

namespace pitm {
namespace {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", value);
    return buf;
}

std::string residual_line(const IterationReport& report, int order) {
    if (order == 0) return "residual: not defined at truncation order 0";
    if (!report.residual_leading_order) {
        return "residual: vanishes through t^" + std::to_string(order - 1);
    }
    const int lead = *report.residual_leading_order;
    return "residual: leading nonzero term at t^" + std::to_string(lead) +
           (lead > 0 ? ", vanishes through t^" + std::to_string(lead - 1) : "");
}

CheckResult residual_check(const IterationReport& report) {
    CheckResult check{"residual", CheckResult::Status::Passed, {}};
    const int certified = report.certified_order;
    if (report.residual_leading_order && *report.residual_leading_order < certified) {
        check.status = CheckResult::Status::Failed;
        check.detail = "residual has a nonzero t^" + std::to_string(*report.residual_leading_order) +
                       " term inside the certified range t^0..t^" + std::to_string(certified - 1);
    } else {
        check.detail = certified > 0 ? "zero through t^" + std::to_string(certified - 1) : "nothing to check";
    }
    return check;
}

}  // namespace

OracleAgreement oracle_agreement(const TimeSeries& computed, const TimeSeries& oracle) {
    OracleAgreement agreement;
    const int n = std::min(computed.order(), oracle.order());
    for (int j = 0; j <= n; ++j) {
        if (!(computed[j] == oracle[j])) {
            agreement.first_mismatch = j;
            return agreement;
        }
        agreement.through = j;
    }
    return agreement;
}

bool VerifyResult::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyResult::first_failure() const {
    for (const auto& c : checks) {
        if (c.status == CheckResult::Status::Failed) return &c;
    }
    return nullptr;
}

std::vector<PrintedDiffRow> printed_diff(CaseId id, const IterationReport& report) {
    const std::vector<TimeSeries> printed = printed_increments(id);
    const TimeSeries& computed = report.solution();
    const int through = std::min({kPrintedCertifiedOrder, report.certified_order, computed.order()});
    const Context& ctx = computed.context();
    std::vector<PrintedDiffRow> rows;
    for (int j = 0; j <= through; ++j) {
        RingElement printed_sum(ctx);
        for (const auto& mu : printed) {
            if (j <= mu.order()) printed_sum += mu[j];
        }
        const RingElement& value = computed[j];
        if (printed_sum == value) continue;
        if (printed_sum.is_polynomial() && value.is_polynomial()) {
            const int top = std::max(printed_sum.num().degree(), value.num().degree());
            for (int i = 0; i <= top; ++i) {
                const Scalar p = printed_sum.num().coeff(i);
                const Scalar c = value.num().coeff(i);
                if (p == c) continue;
                rows.push_back({j, i == 0 ? "1" : "v^" + std::to_string(i), to_string(p), to_string(c)});
            }
        } else {
            rows.push_back({j, "*", to_string(printed_sum), to_string(value)});
        }
    }
    return rows;
}

std::vector<std::string> printed_defects(CaseId id) {
    std::vector<std::string> defects;
    const auto closed = printed_closed_form(id, 1);
    if (!closed) return defects;
    const ProblemSpec spec = preset(id, 1, 1);
    if (!((*closed)[0] == spec.phi)) {
        defects.push_back("published closed form of " + case_name(id) + " evaluates to " + to_string((*closed)[0]) +
                          " at t = 0, but the initial condition is " + to_string(spec.phi));
    }
    return defects;
}

VerifyResult verify(const ProblemSpec& spec, const VerifyOptions& options) {
    VerifyResult result;
    result.report = solve(spec);
    result.preset = match_preset(spec);
    const TimeSeries& total = result.report.solution();
    const int certified = result.report.certified_order;
    const double t_trust = options.t_trust.value_or(options.grid.t_max);

    // Oracle Taylor coefficients.
    if (result.preset) {
        const TimeSeries oracle = exact_taylor(*result.preset, spec.order);
        result.oracle = oracle_agreement(total, oracle);
        CheckResult check{"oracle", CheckResult::Status::Passed, {}};
        if (result.oracle->through < certified) {
            const int j = *result.oracle->first_mismatch;
            check.status = CheckResult::Status::Failed;
            check.detail = "t^" + std::to_string(j) + " coefficient " + to_string(total[j]) +
                           " differs from the exact-solution coefficient " + to_string(oracle[j]);
        } else {
            check.detail = "exact Taylor coefficients agree through t^" + std::to_string(result.oracle->through);
        }
        result.checks.push_back(std::move(check));
    } else {
        result.checks.push_back({"oracle", CheckResult::Status::Skipped, "no closed-form solution for this problem"});
    }

    result.checks.push_back(residual_check(result.report));

    // RK4 cross-check.
    {
        CheckResult check{"rk4", CheckResult::Status::Passed, {}};
        const NumericSeries numeric(total);
        GridParams grid = options.grid;
        BoundaryFn boundary;
        if (!spec.context.mode.is_constant()) {
            boundary = [&numeric](double x, double t) { return numeric(x, t, 0.0); };
        }
        const GridSolution rk = rk4_reference(spec, grid, options.lambda, boundary);
        result.series_vs_rk4 = compare(total, rk, options.lambda, t_trust);
        const auto& cmp = *result.series_vs_rk4;
        check.detail = "max |series - rk4| = " + format_double(cmp.max_abs) + " (rms " + format_double(cmp.rms) +
                       ") over t <= " + format_double(t_trust) + ", tolerance " + format_double(options.tolerance);
        if (!(cmp.max_abs <= options.tolerance)) {
            check.status = CheckResult::Status::Failed;
            check.detail += "; worst at x = " + format_double(cmp.worst_x) + ", t = " + format_double(cmp.worst_t);
        }
        result.checks.push_back(std::move(check));

        if (result.preset) {
            const CaseId id = *result.preset;
            const double lambda = options.lambda;
            result.rk4_vs_exact =
                compare(rk, [id, lambda](double x, double t) { return exact_value(id, x, t, lambda); }, t_trust);
            CheckResult exact{"rk4-vs-exact", CheckResult::Status::Passed,
                              "max |rk4 - exact| = " + format_double(result.rk4_vs_exact->max_abs)};
            if (!(result.rk4_vs_exact->max_abs <= options.tolerance)) exact.status = CheckResult::Status::Failed;
            result.checks.push_back(std::move(exact));
        }
    }

    if (options.golden) {
        CheckResult check{"golden", CheckResult::Status::Passed, {}};
        const TimeSeries& golden = *options.golden;
        const int through = std::min(certified, golden.order());
        for (int j = 0; j <= through; ++j) {
            if (!(golden.context() == total.context()) || !(golden[j] == total[j])) {
                check.status = CheckResult::Status::Failed;
                check.detail = "golden fixture mismatch at t^" + std::to_string(j);
                const RingElement& want = golden[j];
                const RingElement& got = total[j];
                if (want.is_polynomial() && got.is_polynomial()) {
                    const int top = std::max(want.num().degree(), got.num().degree());
                    for (int i = 0; i <= top; ++i) {
                        if (want.num().coeff(i) == got.num().coeff(i)) continue;
                        check.detail += ", coefficient of " + (i == 0 ? std::string("1") : "v^" + std::to_string(i)) +
                                        ": expected " + to_string(want.num().coeff(i)) + ", computed " +
                                        to_string(got.num().coeff(i));
                        break;
                    }
                } else {
                    check.detail += ": expected " + to_string(want) + ", computed " + to_string(got);
                }
                break;
            }
        }
        if (check.status == CheckResult::Status::Passed) {
            check.detail = "matches through t^" + std::to_string(through);
        }
        result.checks.push_back(std::move(check));
    }

    if (result.preset) {
        result.printed_diff = printed_diff(*result.preset, result.report);
        result.printed_defects = printed_defects(*result.preset);
    }
    return result;
}

std::string format_summary(const ProblemSpec& spec, const IterationReport& report) {
    std::string out = format_header(spec, report, "summary");
    const auto id = match_preset(spec);
    if (id) {
        const OracleAgreement agreement = oracle_agreement(report.solution(), exact_taylor(*id, spec.order));
        out += "oracle: " + case_name(*id) + " exact solution, coefficients agree through t^" +
               std::to_string(agreement.through) + "\n";
    } else {
        out += "oracle: none for this problem\n";
    }
    out += "certified: through t^" + std::to_string(report.certified_order) + "\n";
    out += residual_line(report, spec.order) + "\n";
    for (const auto& note : validate(spec)) out += "note: " + note + "\n";
    return out;
}

std::string format_verify_report(const ProblemSpec& spec, const VerifyResult& result, const VerifyOptions& options) {
    std::ostringstream out;
    out << format_header(spec, result.report, "verify");
    const GridParams& g = options.grid;
    out << "# grid: x in [" << g.x_min << ", " << g.x_max << "], nx = " << g.nx << ", t in [0, " << g.t_max
        << "], nt = " << g.nt << ", substeps = " << g.substeps << "\n";
    out << "# lambda: " << options.lambda << "\n";
    out << "# t_trust: " << options.t_trust.value_or(g.t_max) << "\n";
    if (result.preset) out << "# preset: " << case_name(*result.preset) << "\n";
    for (const auto& check : result.checks) {
        const char* status = check.status == CheckResult::Status::Passed   ? "PASS"
                             : check.status == CheckResult::Status::Failed ? "FAIL"
                                                                           : "SKIP";
        out << status << " " << check.name << ": " << check.detail << "\n";
    }
    if (result.preset) {
        out << "published-vs-computed (partial sum of the published mu_0..mu_3):\n";
        if (result.printed_diff.empty()) {
            out << "  no differences\n";
        }
        for (const auto& row : result.printed_diff) {
            out << "  DIFF t^" << row.order << " " << row.term << ": published " << row.printed << ", computed "
                << row.computed << "\n";
        }
        for (const auto& defect : result.printed_defects) out << "  DEFECT " << defect << "\n";
    }
    if (const auto* failure = result.first_failure()) {
        out << "result: FAIL (" << failure->name << ")\n";
    } else {
        out << "result: PASS\n";
    }
    return out.str();
}

}  // namespace pitm
