#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pitm/time_series.hpp"

namespace pitm {

/// u_t = a*u_xx + b*u - c*u^n + h(x,t), u(x,0) = phi.
///
/// Coefficients follow the sign convention of the model equation exactly: an
/// equation written with "+u^2" on the right is encoded with c = -1.
struct ProblemSpec {
    BigRational a{1};
    BigRational b{0};
    BigRational c{0};
    int n = 2;
    Context context;
    RingElement phi;
    /// Polynomial-in-t source h; empty means h = 0.
    std::optional<TimeSeries> source;
    /// Truncation order N.
    int order = 0;
    /// Iteration count K.
    int iterations = 0;
};

/// Throws ConfigError for hard violations (a <= 0, K > N, n < 1, negative
/// orders, context mismatches) and returns notes for accepted degenerate inputs.
std::vector<std::string> validate(const ProblemSpec& spec);

struct IterationReport {
    /// mu_0 .. mu_k
    std::vector<TimeSeries> increments;
    /// Partial sums mu_0 + ... + mu_k.
    std::vector<TimeSeries> totals;
    /// Power of t through which totals.back() equals the true solution.
    int certified_order = 0;
    /// An increment vanished through t^N before K iterations were spent.
    bool reached_fixed_point = false;
    bool truncation_loss = false;
    /// Lowest nonzero order of residual(totals.back()); empty when it vanishes.
    std::optional<int> residual_leading_order;

    const TimeSeries& solution() const { return totals.back(); }
};

/// a*ddx(ddx(u)) + b*u - c*u^n.
TimeSeries rhs_apply(const TimeSeries& u, const ProblemSpec& spec);

/// phi + lt_integral(h), at the spec's truncation order.
TimeSeries build_H(const ProblemSpec& spec);

/// mu_c = H - total + lt_integral(rhs(total)), the perturbation parameter at 1.
TimeSeries correction(const TimeSeries& total, const ProblemSpec& spec);

/// Runs the correction loop K times (or until an increment vanishes).
IterationReport solve(const ProblemSpec& spec);

/// d/dt u - rhs(u) - h, meaningful through t^{N-1}; returned at order max(N-1, 0).
TimeSeries residual(const TimeSeries& u, const ProblemSpec& spec);

}  // namespace pitm
