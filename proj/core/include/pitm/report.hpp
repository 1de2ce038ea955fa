#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitm/engine.hpp"

namespace pitm {

enum class DumpKind { Increments, Totals, SDomain };

/// Text dump of one list of series: a '#' metadata header echoing the problem
/// and the certification data, then one "[name_k]" section per series.
std::string format_dump(const ProblemSpec& spec, const IterationReport& report, DumpKind kind);

/// Metadata header alone (shared by every dump and by verification reports).
std::string format_header(const ProblemSpec& spec, const IterationReport& report, std::string_view kind);

struct ParsedDump {
    ProblemSpec spec;
    DumpKind kind = DumpKind::Increments;
    int certified_order = 0;
    bool reached_fixed_point = false;
    bool truncation_loss = false;
    std::optional<int> residual_leading_order;
    std::vector<TimeSeries> series;
};

/// Reads back increments/totals dumps. Throws ParseError with a line number.
ParsedDump parse_dump(std::string_view text);

}  // namespace pitm
