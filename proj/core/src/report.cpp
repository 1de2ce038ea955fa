#include "pitm/report.hpp"

#include <map>
#include <sstream>

#include "pitm/errors.hpp"
#include "pitm/laplace.hpp"
#include "pitm/text.hpp"

namespace pitm {
namespace {

const char* kind_name(DumpKind kind) {
    switch (kind) {
        case DumpKind::Increments: return "increments";
        case DumpKind::Totals: return "totals";
        case DumpKind::SDomain: return "sdomain";
    }
    return "?";
}

std::string section_name(DumpKind kind, std::size_t k) {
    switch (kind) {
        case DumpKind::Increments: return "mu_" + std::to_string(k);
        case DumpKind::Totals: return "total_" + std::to_string(k);
        case DumpKind::SDomain: return "L[mu_" + std::to_string(k) + "]";
    }
    return {};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

DerivationMode parse_mode(std::string_view text) {
    if (text == "constant") return DerivationMode::constant();
    if (text.starts_with("exponential(") && text.ends_with(")")) {
        return DerivationMode::exponential(parse_rational(text.substr(12, text.size() - 13)));
    }
    throw ParseError("unknown derivation mode '" + std::string(text) + "'");
}

int parse_int(std::string_view text) {
    const BigRational r = parse_rational(text);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
    return static_cast<int>(r.get_num().get_si());
}

}  // namespace

std::string format_header(const ProblemSpec& spec, const IterationReport& report, std::string_view kind) {
    std::ostringstream out;
    out << "# pitm " << kind << "\n";
    out << "# equation: u_t = a*u_xx + b*u - c*u^n + h\n";
    out << "# a: " << to_string(spec.a) << "\n";
    out << "# b: " << to_string(spec.b) << "\n";
    out << "# c: " << to_string(spec.c) << "\n";
    out << "# n: " << spec.n << "\n";
    out << "# mode: " << to_string(spec.context.mode) << "\n";
    out << "# d: " << spec.context.d << "\n";
    out << "# phi: " << to_string(spec.phi) << "\n";
    if (!spec.source || spec.source->is_zero()) {
        out << "# source: 0\n";
    } else {
        out << "# source:\n";
        const TimeSeries& h = *spec.source;
        for (int j = 0; j <= h.order(); ++j) {
            if (!h[j].is_zero()) out << "#   t^" << j << ": " << to_string(h[j]) << "\n";
        }
    }
    out << "# order: " << spec.order << "\n";
    out << "# iterations: " << spec.iterations << "\n";
    out << "# iterations_run: " << report.increments.size() - 1 << "\n";
    out << "# fixed_point: " << (report.reached_fixed_point ? "true" : "false") << "\n";
    out << "# certified_order: " << report.certified_order << "\n";
    out << "# truncation_loss: " << (report.truncation_loss ? "true" : "false") << "\n";
    out << "# residual_leading_order: "
        << (report.residual_leading_order ? std::to_string(*report.residual_leading_order) : "none") << "\n";
    return out.str();
}

std::string format_dump(const ProblemSpec& spec, const IterationReport& report, DumpKind kind) {
    std::string out = format_header(spec, report, kind_name(kind));
    const auto& list = kind == DumpKind::Totals ? report.totals : report.increments;
    for (std::size_t k = 0; k < list.size(); ++k) {
        out += "[" + section_name(kind, k) + "]\n";
        out += kind == DumpKind::SDomain ? to_string(laplace(list[k])) : to_string(list[k]);
    }
    return out;
}

ParsedDump parse_dump(std::string_view text) {
    ParsedDump dump;
    std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> header;
    std::string source_text;
    std::vector<std::string> sections;
    bool in_source = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (line.starts_with("#")) {
            const std::string_view body = trim(line.substr(1));
            if (in_source && body.starts_with("t^")) {
                source_text += std::string(body) + "\n";
                continue;
            }
            in_source = false;
            const auto colon = body.find(':');
            if (colon == std::string_view::npos) continue;
            const std::string key(trim(body.substr(0, colon)));
            const std::string value(trim(body.substr(colon + 1)));
            if (key == "source" && value.empty()) in_source = true;
            header[key] = {value, line_no};
            continue;
        }
        if (line.starts_with("[")) {
            if (!line.ends_with("]")) throw ParseError("line " + std::to_string(line_no) + ": malformed section");
            sections.emplace_back();
            continue;
        }
        if (trim(line).empty()) continue;
        if (sections.empty()) throw ParseError("line " + std::to_string(line_no) + ": series line outside a section");
        sections.back() += std::string(line) + "\n";
    }

    auto field = [&](const char* key) -> const std::string& {
        auto it = header.find(key);
        if (it == header.end()) throw ParseError(std::string("dump header lacks '") + key + "'");
        return it->second.first;
    };
    // Header values are parsed under the line number they came from.
    auto at_line = [&](const char* key, auto&& parse) {
        field(key);
        try {
            return parse(header.find(key)->second.first);
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(header.find(key)->second.second) + ": " + key + ": " + e.what());
        }
    };
    const std::string_view first_line = text.substr(0, text.find('\n'));
    if (first_line == "# pitm increments") {
        dump.kind = DumpKind::Increments;
    } else if (first_line == "# pitm totals") {
        dump.kind = DumpKind::Totals;
    } else {
        throw ParseError("line 1: not an increments or totals dump");
    }

    const auto rational = [](const std::string& v) { return parse_rational(v); };
    const auto integer = [](const std::string& v) { return parse_int(v); };
    ProblemSpec& spec = dump.spec;
    spec.a = at_line("a", rational);
    spec.b = at_line("b", rational);
    spec.c = at_line("c", rational);
    spec.n = at_line("n", integer);
    spec.context = Context{at_line("d", integer), at_line("mode", [](const std::string& v) { return parse_mode(v); })};
    spec.order = at_line("order", integer);
    spec.iterations = at_line("iterations", integer);
    spec.phi = at_line("phi", [&](const std::string& v) { return parse_ring_element(v, spec.context); });
    if (!source_text.empty()) spec.source = parse_series(source_text, spec.context, spec.order);
    dump.certified_order = at_line("certified_order", integer);
    dump.reached_fixed_point = field("fixed_point") == "true";
    dump.truncation_loss = field("truncation_loss") == "true";
    if (field("residual_leading_order") != "none") {
        dump.residual_leading_order = at_line("residual_leading_order", integer);
    }
    for (const auto& body : sections) {
        dump.series.push_back(parse_series(body, spec.context, spec.order));
    }
    return dump;
}

}  // namespace pitm
