#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pitm/cases.hpp"
#include "pitm/rk4.hpp"

namespace pitm {

struct VerifyOptions {
    GridParams grid;
    /// lambda used for Constant-mode evaluation.
    double lambda = 0.1;
    /// Series/RK4 comparison window; defaults to grid.t_max.
    std::optional<double> t_trust;
    double tolerance = 1e-6;
    /// Expected coefficients of the final partial sum.
    std::optional<TimeSeries> golden;
};

struct CheckResult {
    enum class Status { Passed, Failed, Skipped };
    std::string name;
    Status status = Status::Skipped;
    std::string detail;
};

/// One disagreement between the published iterates and the computed series.
struct PrintedDiffRow {
    int order = 0;
    /// "v^i" for polynomial coefficients, "*" when whole elements are compared.
    std::string term;
    std::string printed;
    std::string computed;
};

struct OracleAgreement {
    /// Highest j with every coefficient through t^j equal; -1 if t^0 differs.
    int through = -1;
    std::optional<int> first_mismatch;
};

OracleAgreement oracle_agreement(const TimeSeries& computed, const TimeSeries& oracle);

struct VerifyResult {
    IterationReport report;
    std::optional<CaseId> preset;
    std::optional<OracleAgreement> oracle;
    std::optional<CompareReport> series_vs_rk4;
    std::optional<CompareReport> rk4_vs_exact;
    std::vector<CheckResult> checks;
    std::vector<PrintedDiffRow> printed_diff;
    std::vector<std::string> printed_defects;

    bool passed() const;
    const CheckResult* first_failure() const;
};

/// Published-vs-computed coefficient differences through
/// min(kPrintedCertifiedOrder, certified order).
std::vector<PrintedDiffRow> printed_diff(CaseId id, const IterationReport& report);

/// Published closed forms whose t = 0 value contradicts the initial condition.
std::vector<std::string> printed_defects(CaseId id);

/// Full check suite: oracle Taylor agreement, residual order, RK4 cross-check,
/// optional golden fixture, plus the informational published-value diff.
VerifyResult verify(const ProblemSpec& spec, const VerifyOptions& options);

/// Short oracle/residual summary written next to the series dumps.
std::string format_summary(const ProblemSpec& spec, const IterationReport& report);

std::string format_verify_report(const ProblemSpec& spec, const VerifyResult& result, const VerifyOptions& options);

}  // namespace pitm
