#include "pitm/oracle.hpp"

#include <cmath>

#include "pitm/errors.hpp"
#include "pitm/text.hpp"

namespace pitm {
namespace {

TimeSeries constant_series(const char* expr, const Context& ctx, int order) {
    return TimeSeries::constant(parse_ring_element(expr, ctx), order);
}

}  // namespace

TimeSeries series_exp(const Scalar& rate, const Context& ctx, int order) {
    TimeSeries out(ctx, order);
    Scalar term = Scalar::one(ctx.d);
    for (int j = 0; j <= order; ++j) {
        if (j > 0) term = term * rate * Scalar(make_rational(1, j), ctx.d);
        out.set(j, RingElement(term, ctx));
    }
    return out;
}

TimeSeries series_div(const TimeSeries& num, const TimeSeries& den) {
    num.check_compatible(den);
    if (den[0].is_zero()) {
        throw SingularDivision("series divisor has a zero constant term");
    }
    const RingElement lead_inv = den[0].inverse();
    TimeSeries q(num.context(), num.order());
    for (int j = 0; j <= num.order(); ++j) {
        RingElement acc = num[j];
        for (int i = 0; i < j; ++i) {
            if (q[i].is_zero() || den[j - i].is_zero()) continue;
            acc -= q[i] * den[j - i];
        }
        q.set(j, acc * lead_inv);
    }
    return q;
}

TimeSeries exact_taylor_case1(int order) {
    const Context ctx = case_context(CaseId::I);
    const TimeSeries e2t = series_exp(Scalar(2), ctx, order);
    const TimeSeries lambda = constant_series("v", ctx, order);
    const TimeSeries numerator = series_mul(constant_series("2*v", ctx, order), e2t);
    const TimeSeries denominator = series_sub(constant_series("2 + v", ctx, order), series_mul(lambda, e2t));
    return series_div(numerator, denominator);
}

TimeSeries exact_taylor_case2(int order) {
    const Context ctx = case_context(CaseId::II);
    const TimeSeries e2t = series_exp(Scalar(2), ctx, order);
    const TimeSeries numerator = series_mul(constant_series("2*v", ctx, order), e2t);
    const TimeSeries denominator =
        series_add(constant_series("2 - 3*v", ctx, order), series_mul(constant_series("3*v", ctx, order), e2t));
    return series_div(numerator, denominator);
}

TimeSeries exact_taylor_case3(int order) {
    const Context ctx = case_context(CaseId::III);
    const TimeSeries e3t = series_exp(Scalar(3, ctx.d), ctx, order);
    const TimeSeries wave = series_mul(constant_series("v", ctx, order), e3t);
    const TimeSeries one = constant_series("1", ctx, order);
    return series_scale(series_div(wave, series_add(one, wave)), parse_ring_element("1/3*sqrt(6)", ctx));
}

TimeSeries exact_taylor(CaseId id, int order) {
    switch (id) {
        case CaseId::I: return exact_taylor_case1(order);
        case CaseId::II: return exact_taylor_case2(order);
        case CaseId::III: return exact_taylor_case3(order);
    }
    throw UsageError("unknown case");
}

double exact_value(CaseId id, double x, double t, double lambda) {
    switch (id) {
        case CaseId::I: {
            const double e = std::exp(2.0 * t);
            return 2.0 * e * lambda / (2.0 + (1.0 - e) * lambda);
        }
        case CaseId::II: {
            const double e = std::exp(2.0 * t);
            return 2.0 * e * lambda / (2.0 + 3.0 * lambda * (e - 1.0));
        }
        case CaseId::III: {
            // sqrt(2/3) / (1 + e^{-(x+3t)}) avoids overflow for large x.
            return std::sqrt(2.0 / 3.0) / (1.0 + std::exp(-(x + 3.0 * t)));
        }
    }
    throw UsageError("unknown case");
}

std::optional<TimeSeries> printed_closed_form(CaseId id, int order) {
    const Context ctx = case_context(id);
    if (id == CaseId::III) return std::nullopt;
    const TimeSeries e2t = series_exp(Scalar(2), ctx, order);
    const TimeSeries numerator = series_mul(constant_series("2*v", ctx, order), e2t);
    const TimeSeries lambda = constant_series("v", ctx, order);
    if (id == CaseId::I) {
        return series_div(numerator, series_sub(constant_series("2 + v", ctx, order), series_mul(lambda, e2t)));
    }
    // -2 + 3(1 - e^{2t}) lambda
    const TimeSeries denominator = series_sub(constant_series("-2 + 3*v", ctx, order),
                                              series_mul(constant_series("3*v", ctx, order), e2t));
    return series_div(numerator, denominator);
}

}  // namespace pitm
