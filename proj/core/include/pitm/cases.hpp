#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitm/engine.hpp"

namespace pitm {

/// The three worked Newell-Whitehead-Segel problems:
///   I:   u_t = 5 u_xx + 2u + u^2,   u(x,0) = lambda
///   II:  u_t = u_xx + 2u - 3u^2,    u(x,0) = lambda
///   III: u_t = u_xx + 2u - 3u^3,    u(x,0) = sqrt(2/3) e^{2x}/(e^x + e^{2x})
enum class CaseId { I, II, III };

/// Accepts "I", "II", "III" and "case-I", "case-II", "case-III".
std::optional<CaseId> parse_case_id(std::string_view text);
/// "case-I", "case-II" or "case-III".
std::string case_name(CaseId id);

Context case_context(CaseId id);
ProblemSpec preset(CaseId id, int order, int iterations);
/// The preset whose equation and initial condition match spec (order and
/// iteration count are ignored), if any.
std::optional<CaseId> match_preset(const ProblemSpec& spec);

/// Iterates as they appear in the published worked solutions, mu_0 .. mu_3.
/// Each series has the order of its highest printed power.
std::vector<TimeSeries> printed_increments(CaseId id);

/// Partial sums of the printed iterates are trustworthy through this power.
inline constexpr int kPrintedCertifiedOrder = 3;

}  // namespace pitm
