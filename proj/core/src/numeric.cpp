#include "pitm/numeric.hpp"

#include <cmath>
#include <sstream>

#include "pitm/errors.hpp"

namespace pitm {
namespace {

std::vector<double> to_doubles(const SymbolPoly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_double());
    return out;
}

double horner(const std::vector<double>& c, double v) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
    return acc;
}

}  // namespace

NumericSeries::NumericSeries(const TimeSeries& u)
    : exponential_(!u.context().mode.is_constant()), rate_(u.context().mode.rate().get_d()) {
    coeffs_.reserve(static_cast<std::size_t>(u.order()) + 1);
    for (const auto& c : u.coeffs()) {
        coeffs_.push_back({to_doubles(c.num()), to_doubles(c.den())});
    }
}

double NumericSeries::symbol_value(double x, double v_value) const {
    return exponential_ ? std::exp(rate_ * x) : v_value;
}

double NumericSeries::operator()(double x, double t, double v_value) const {
    const double v = symbol_value(x, v_value);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        double value = 0.0;
        if (!it->num.empty()) {
            const double den = horner(it->den, v);
            if (den == 0.0 || !std::isfinite(den)) {
                std::ostringstream msg;
                msg << "coefficient denominator vanishes at x = " << x << ", t = " << t;
                throw EvaluationSingularity(msg.str());
            }
            value = horner(it->num, v) / den;
        }
        acc = acc * t + value;
    }
    if (!std::isfinite(acc)) {
        std::ostringstream msg;
        msg << "non-finite series value at x = " << x << ", t = " << t;
        throw EvaluationSingularity(msg.str());
    }
    return acc;
}

double eval_numeric(const TimeSeries& u, double x, double t, double v_value) {
    return NumericSeries(u)(x, t, v_value);
}

}  // namespace pitm
