#pragma once

#include <optional>

#include "pitm/cases.hpp"
#include "pitm/time_series.hpp"

namespace pitm {

/// sum_{j<=N} rate^j/j! t^j, with constant-in-v coefficients.
TimeSeries series_exp(const Scalar& rate, const Context& ctx, int order);

/// q with q*den = num through t^N. Throws SingularDivision when den's
/// constant term vanishes.
TimeSeries series_div(const TimeSeries& num, const TimeSeries& den);

/// 2 lambda e^{2t} / (2 + (1 - e^{2t}) lambda).
TimeSeries exact_taylor_case1(int order);
/// Logistic solution 2 lambda e^{2t} / (2 + 3 lambda (e^{2t} - 1)).
TimeSeries exact_taylor_case2(int order);
/// Traveling wave sqrt(2/3) e^{x+3t} / (1 + e^{x+3t}).
TimeSeries exact_taylor_case3(int order);
TimeSeries exact_taylor(CaseId id, int order);

/// Closed-form value of the exact solution (the same formulas as above).
double exact_value(CaseId id, double x, double t, double lambda);

/// Taylor series of the closed form exactly as published, where one exists
/// (cases I and II). Case II's published denominator is -2 + 3(1 - e^{2t})lambda.
std::optional<TimeSeries> printed_closed_form(CaseId id, int order);

}  // namespace pitm
