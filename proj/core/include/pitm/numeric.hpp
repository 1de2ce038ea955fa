#pragma once

#include <vector>

#include "pitm/time_series.hpp"

namespace pitm {

/// Floating-point image of a TimeSeries, built once and evaluated many times.
class NumericSeries {
public:
    explicit NumericSeries(const TimeSeries& u);

    /// Horner in t over the numerically evaluated coefficients. In Exponential(k)
    /// mode v = exp(k*x) and v_value is ignored; in Constant mode v = v_value.
    /// Throws EvaluationSingularity on a vanishing denominator.
    double operator()(double x, double t, double v_value) const;

    /// Symbol value used at x.
    double symbol_value(double x, double v_value) const;

private:
    struct Coefficient {
        std::vector<double> num;
        std::vector<double> den;
    };

    std::vector<Coefficient> coeffs_;
    bool exponential_ = false;
    double rate_ = 0.0;
};

double eval_numeric(const TimeSeries& u, double x, double t, double v_value);

}  // namespace pitm
