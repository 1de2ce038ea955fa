#include "pitm/time_series.hpp"

#include <string>

#include "pitm/errors.hpp"

namespace pitm {

TimeSeries::TimeSeries(Context ctx, int order)
    : coeffs_(static_cast<std::size_t>(order) + 1, RingElement(ctx)), order_(order), ctx_(std::move(ctx)) {
    if (order < 0) {
        throw UsageError("truncation order must be >= 0");
    }
}

TimeSeries::TimeSeries(std::vector<RingElement> coeffs, int order, Context ctx)
    : TimeSeries(std::move(ctx), order) {
    if (coeffs.size() > coeffs_.size()) {
        throw UsageError("series has " + std::to_string(coeffs.size()) + " coefficients but order " +
                         std::to_string(order));
    }
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        set(static_cast<int>(j), std::move(coeffs[j]));
    }
}

TimeSeries TimeSeries::constant(const RingElement& c, int order) {
    TimeSeries out(c.context(), order);
    out.set(0, c);
    return out;
}

TimeSeries TimeSeries::monomial(const RingElement& c, int power, int order) {
    TimeSeries out(c.context(), order);
    if (power <= order) out.set(power, c);
    return out;
}

void TimeSeries::set(int j, RingElement value) {
    if (!(value.context() == ctx_)) {
        throw UsageError("coefficient context does not match the series");
    }
    coeffs_.at(static_cast<std::size_t>(j)) = std::move(value);
}

bool TimeSeries::is_zero() const { return !leading_order().has_value(); }

std::optional<int> TimeSeries::leading_order() const {
    for (int j = 0; j <= order_; ++j) {
        if (!(*this)[j].is_zero()) return j;
    }
    return std::nullopt;
}

TimeSeries TimeSeries::with_order(int order) const {
    TimeSeries out(ctx_, order);
    for (int j = 0; j <= std::min(order, order_); ++j) out.coeffs_[static_cast<std::size_t>(j)] = (*this)[j];
    out.truncation_loss_ = truncation_loss_;
    return out;
}

void TimeSeries::check_compatible(const TimeSeries& other) const {
    if (order_ != other.order_) {
        throw UsageError("series truncation orders differ (" + std::to_string(order_) + " vs " +
                         std::to_string(other.order_) + ")");
    }
    if (!(ctx_ == other.ctx_)) {
        throw UsageError("series from different contexts");
    }
}

TimeSeries series_add(const TimeSeries& u, const TimeSeries& w) {
    u.check_compatible(w);
    TimeSeries out(u.context(), u.order());
    for (int j = 0; j <= u.order(); ++j) out.set(j, u[j] + w[j]);
    out.set_truncation_loss(u.truncation_loss() || w.truncation_loss());
    return out;
}

TimeSeries series_neg(const TimeSeries& u) {
    TimeSeries out(u.context(), u.order());
    for (int j = 0; j <= u.order(); ++j) out.set(j, -u[j]);
    out.set_truncation_loss(u.truncation_loss());
    return out;
}

TimeSeries series_sub(const TimeSeries& u, const TimeSeries& w) {
    u.check_compatible(w);
    TimeSeries out(u.context(), u.order());
    for (int j = 0; j <= u.order(); ++j) out.set(j, u[j] - w[j]);
    out.set_truncation_loss(u.truncation_loss() || w.truncation_loss());
    return out;
}

TimeSeries series_mul(const TimeSeries& u, const TimeSeries& w) {
    u.check_compatible(w);
    const int n = u.order();
    TimeSeries out(u.context(), n);
    for (int k = 0; k <= n; ++k) {
        RingElement acc(u.context());
        for (int i = 0; i <= k; ++i) {
            if (u[i].is_zero() || w[k - i].is_zero()) continue;
            acc += u[i] * w[k - i];
        }
        out.set(k, std::move(acc));
    }
    out.set_truncation_loss(u.truncation_loss() || w.truncation_loss());
    return out;
}

TimeSeries series_pow(const TimeSeries& u, int m) {
    if (m < 1) {
        throw UsageError("series_pow exponent must be >= 1");
    }
    TimeSeries base = u;
    std::optional<TimeSeries> acc;
    while (m > 0) {
        if (m & 1) acc = acc ? series_mul(*acc, base) : base;
        m >>= 1;
        if (m > 0) base = series_mul(base, base);
    }
    return *acc;
}

TimeSeries series_scale(const TimeSeries& u, const RingElement& c) {
    TimeSeries out(u.context(), u.order());
    for (int j = 0; j <= u.order(); ++j) out.set(j, u[j] * c);
    out.set_truncation_loss(u.truncation_loss());
    return out;
}

TimeSeries integrate_t(const TimeSeries& u) {
    const int n = u.order();
    const Context& ctx = u.context();
    TimeSeries out(ctx, n);
    for (int j = 0; j < n; ++j) {
        out.set(j + 1, u[j].scaled(Scalar(make_rational(1, j + 1), ctx.d)));
    }
    out.set_truncation_loss(u.truncation_loss() || !u[n].is_zero());
    return out;
}

TimeSeries differentiate_t(const TimeSeries& u) {
    const int n = u.order();
    const Context& ctx = u.context();
    TimeSeries out(ctx, n);
    for (int j = 1; j <= n; ++j) {
        out.set(j - 1, u[j].scaled(Scalar(static_cast<long>(j), ctx.d)));
    }
    out.set_truncation_loss(u.truncation_loss());
    return out;
}

TimeSeries ddx(const TimeSeries& u) {
    TimeSeries out(u.context(), u.order());
    for (int j = 0; j <= u.order(); ++j) out.set(j, ddx(u[j]));
    out.set_truncation_loss(u.truncation_loss());
    return out;
}

}  // namespace pitm
