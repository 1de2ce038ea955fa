#pragma once

#include <string>
#include <vector>

#include "pitm/time_series.hpp"

namespace pitm {

/// Laplace image of a truncated time series: sum_j c_j * j! / s^{j+1}.
///
/// Only the span {1/s^{j+1}} is represented, which is closed under the
/// transform of t-polynomials and under division by s (up to truncation).
class SDomainSeries {
public:
    SDomainSeries(Context ctx, int order);

    int order() const { return order_; }
    const Context& context() const { return ctx_; }
    /// c_j; the represented term is c_j * j! / s^{j+1}.
    const RingElement& term(int j) const { return terms_[static_cast<std::size_t>(j)]; }
    void set_term(int j, RingElement value);

    bool truncation_loss() const { return truncation_loss_; }
    void set_truncation_loss(bool lost) { truncation_loss_ = lost; }
    bool is_zero() const;

    friend bool operator==(const SDomainSeries& lhs, const SDomainSeries& rhs) {
        return lhs.order_ == rhs.order_ && lhs.ctx_ == rhs.ctx_ && lhs.terms_ == rhs.terms_;
    }

private:
    std::vector<RingElement> terms_;
    int order_ = 0;
    Context ctx_;
    bool truncation_loss_ = false;
};

/// t^j -> j!/s^{j+1}.
SDomainSeries laplace(const TimeSeries& u);
/// F -> F/s; the index-N term is dropped and flagged.
SDomainSeries div_by_s(const SDomainSeries& image);
/// j!/s^{j+1} -> t^j.
TimeSeries inverse_laplace(const SDomainSeries& image);
/// inverse_laplace(div_by_s(laplace(u))); equal to integrate_t(u).
TimeSeries lt_integral(const TimeSeries& u);

/// One "s^-(j+1): <c_j * j!>" line per index, e.g. "s^-3: (2)" for t^2.
std::string to_string(const SDomainSeries& image);

}  // namespace pitm
