#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pitm/time_series.hpp"

namespace pitm {

// Canonical text forms. Polynomials print as "c0 + c1*v + c2*v^2" with zero
// terms omitted, ring elements as "(num)/(den)" with "/(1)" omitted, series as
// one "t^j: <element>" line per power 0..N.

std::string to_string(const SymbolPoly& p);
std::string to_string(const RingElement& e);
std::string to_string(const TimeSeries& u);

/// Parses an arithmetic expression in v over Q(sqrt(d)): integers, v, sqrt(k),
/// + - * / ^ and parentheses. sqrt(k) must lie in Q(sqrt(ctx.d)).
/// Round-trips every canonical to_string(RingElement).
RingElement parse_ring_element(std::string_view text, const Context& ctx);

/// Parses "t^j: <expr>" lines; blank lines and lines starting with '#' are
/// skipped. The order is the largest power seen unless given explicitly.
TimeSeries parse_series(std::string_view text, const Context& ctx, std::optional<int> order = std::nullopt);

}  // namespace pitm
