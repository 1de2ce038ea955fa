#include "pitm/engine.hpp"

#include <algorithm>

#include "pitm/errors.hpp"
#include "pitm/laplace.hpp"

namespace pitm {
namespace {

void check_series_context(const TimeSeries& u, const ProblemSpec& spec, const char* what) {
    if (!(u.context() == spec.context)) {
        throw UsageError(std::string(what) + " does not share the problem's context");
    }
    if (u.order() != spec.order) {
        throw UsageError(std::string(what) + " has order " + std::to_string(u.order()) + ", problem order is " +
                         std::to_string(spec.order));
    }
}

TimeSeries source_at_order(const ProblemSpec& spec, int order) {
    if (!spec.source) return TimeSeries(spec.context, order);
    return spec.source->with_order(order);
}

TimeSeries correction_with(const TimeSeries& total, const TimeSeries& H, const ProblemSpec& spec) {
    return series_add(series_sub(H, total), lt_integral(rhs_apply(total, spec)));
}

}  // namespace

std::vector<std::string> validate(const ProblemSpec& spec) {
    if (sgn(spec.a) <= 0) {
        throw ConfigError("diffusion coefficient a must satisfy a > 0 (r > 0 in the model equation), got " +
                          to_string(spec.a));
    }
    if (spec.n < 1) throw ConfigError("power n must be a positive integer, got " + std::to_string(spec.n));
    if (spec.order < 0) throw ConfigError("truncation order N must be >= 0");
    if (spec.iterations < 0) throw ConfigError("iteration count K must be >= 0");
    if (spec.iterations > spec.order) {
        throw ConfigError("iteration count K = " + std::to_string(spec.iterations) +
                          " exceeds truncation order N = " + std::to_string(spec.order));
    }
    if (!(spec.phi.context() == spec.context)) throw ConfigError("initial condition context mismatch");
    if (spec.source && !(spec.source->context() == spec.context)) throw ConfigError("source context mismatch");
    if (spec.source && spec.source->order() > spec.order) {
        for (int j = spec.order + 1; j <= spec.source->order(); ++j) {
            if (!(*spec.source)[j].is_zero()) {
                throw ConfigError("source has terms beyond truncation order N");
            }
        }
    }
    std::vector<std::string> notes;
    if (spec.n == 1) notes.emplace_back("n = 1: the equation is linear");
    if (sgn(spec.c) == 0) notes.emplace_back("c = 0: the equation is linear");
    return notes;
}

TimeSeries rhs_apply(const TimeSeries& u, const ProblemSpec& spec) {
    check_series_context(u, spec, "series");
    const Context& ctx = spec.context;
    TimeSeries out(ctx, u.order());
    if (!ctx.mode.is_constant()) {
        out = series_scale(ddx(ddx(u)), RingElement(Scalar(spec.a, ctx.d), ctx));
    }
    if (sgn(spec.b) != 0) {
        out = series_add(out, series_scale(u, RingElement(Scalar(spec.b, ctx.d), ctx)));
    }
    if (sgn(spec.c) != 0) {
        out = series_sub(out, series_scale(series_pow(u, spec.n), RingElement(Scalar(spec.c, ctx.d), ctx)));
    }
    out.set_truncation_loss(u.truncation_loss());
    return out;
}

TimeSeries build_H(const ProblemSpec& spec) {
    TimeSeries H = TimeSeries::constant(spec.phi, spec.order);
    if (spec.source) {
        H = series_add(H, lt_integral(source_at_order(spec, spec.order)));
    }
    return H;
}

TimeSeries correction(const TimeSeries& total, const ProblemSpec& spec) {
    check_series_context(total, spec, "partial sum");
    return correction_with(total, build_H(spec), spec);
}

IterationReport solve(const ProblemSpec& spec) {
    validate(spec);
    IterationReport report;
    const TimeSeries H = build_H(spec);
    report.increments.push_back(H);
    report.totals.push_back(H);
    for (int k = 1; k <= spec.iterations; ++k) {
        TimeSeries increment = correction_with(report.totals.back(), H, spec);
        TimeSeries total = series_add(report.totals.back(), increment);
        const bool vanished = increment.is_zero();
        report.increments.push_back(std::move(increment));
        report.totals.push_back(std::move(total));
        if (vanished) {
            report.reached_fixed_point = true;
            break;
        }
    }
    // A vanishing increment means the truncated fixed-point equation holds
    // exactly, which pins every coefficient through t^N.
    report.certified_order = report.reached_fixed_point ? spec.order : std::min(spec.iterations, spec.order);
    report.truncation_loss = report.totals.back().truncation_loss();
    report.residual_leading_order = residual(report.totals.back(), spec).leading_order();
    if (spec.order == 0) report.residual_leading_order.reset();
    return report;
}

TimeSeries residual(const TimeSeries& u, const ProblemSpec& spec) {
    check_series_context(u, spec, "series");
    const int n = spec.order;
    if (n == 0) return TimeSeries(spec.context, 0);
    TimeSeries r = series_sub(series_sub(differentiate_t(u), rhs_apply(u, spec)), source_at_order(spec, n));
    return r.with_order(n - 1);
}

}  // namespace pitm
