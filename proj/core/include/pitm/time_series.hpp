#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pitm/ring_element.hpp"

namespace pitm {

/// Truncated power series sum_{j<=N} c_j t^j with RingElement coefficients.
///
/// Every series stores exactly N+1 coefficients. truncation_loss records that
/// a nonzero t^{N+1} term was dropped by time integration somewhere upstream;
/// it is bookkeeping only and does not take part in ==.
class TimeSeries {
public:
    TimeSeries(Context ctx, int order);
    TimeSeries(std::vector<RingElement> coeffs, int order, Context ctx);

    static TimeSeries constant(const RingElement& c, int order);
    static TimeSeries monomial(const RingElement& c, int power, int order);

    int order() const { return order_; }
    const Context& context() const { return ctx_; }
    std::span<const RingElement> coeffs() const { return coeffs_; }
    const RingElement& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
    void set(int j, RingElement value);

    bool truncation_loss() const { return truncation_loss_; }
    void set_truncation_loss(bool lost) { truncation_loss_ = lost; }

    bool is_zero() const;
    /// Lowest power with a nonzero coefficient.
    std::optional<int> leading_order() const;
    /// Same coefficients, truncated or zero-padded to another order.
    TimeSeries with_order(int order) const;

    friend bool operator==(const TimeSeries& lhs, const TimeSeries& rhs) {
        return lhs.order_ == rhs.order_ && lhs.ctx_ == rhs.ctx_ && lhs.coeffs_ == rhs.coeffs_;
    }

    void check_compatible(const TimeSeries& other) const;

private:
    std::vector<RingElement> coeffs_;
    int order_ = 0;
    Context ctx_;
    bool truncation_loss_ = false;
};

TimeSeries series_add(const TimeSeries& u, const TimeSeries& w);
TimeSeries series_sub(const TimeSeries& u, const TimeSeries& w);
TimeSeries series_neg(const TimeSeries& u);
/// Cauchy product truncated at t^N.
TimeSeries series_mul(const TimeSeries& u, const TimeSeries& w);
/// u^m for m >= 1 by binary powering.
TimeSeries series_pow(const TimeSeries& u, int m);
TimeSeries series_scale(const TimeSeries& u, const RingElement& c);

/// Term-wise integral from 0 to t; the t^N coefficient falls off the end.
TimeSeries integrate_t(const TimeSeries& u);
/// Formal d/dt; the result keeps order N with a zero t^N coefficient.
TimeSeries differentiate_t(const TimeSeries& u);
/// Coefficient-wise spatial derivative.
TimeSeries ddx(const TimeSeries& u);

inline TimeSeries operator+(const TimeSeries& u, const TimeSeries& w) { return series_add(u, w); }
inline TimeSeries operator-(const TimeSeries& u, const TimeSeries& w) { return series_sub(u, w); }
inline TimeSeries operator*(const TimeSeries& u, const TimeSeries& w) { return series_mul(u, w); }

}  // namespace pitm
