#include "pitm/cases.hpp"

#include <algorithm>

#include "pitm/text.hpp"

namespace pitm {
namespace {

struct PrintedTerm {
    int mu;
    int power;
    const char* expr;
};

// Transcribed term by term with lambda -> v and e^x -> v; sqrt(2/3) is
// written 1/3*sqrt(6) and sqrt(3/2) as 1/2*sqrt(6). Duplicated printed terms
// are kept as separate entries.
constexpr PrintedTerm kCaseI[] = {
    {0, 0, "v"},
    {1, 1, "2*v + v^2"},
    {2, 2, "2*v + v^2"},
    {2, 3, "4/3*v^2 + 4/3*v^3 + 1/3*v^4"},
    {3, 3, "4/3*v + 2/3*v^2"},
    {3, 4, "2/3*v^2"},
    {3, 5, "4/5*v^2"},
    {3, 4, "2/3*v^2"},
    {3, 5, "4/5*v^3"},
    {3, 6, "8/8*v^3"},
    {3, 4, "1/6*v^4"},
    {3, 5, "1/5*v^4"},
    {3, 6, "4/3*v^4"},
    {3, 7, "16/63*v^4"},
    {3, 6, "2/3*v^5"},
    {3, 7, "32/63*v^5"},
    {3, 6, "1/9*v^6"},
    {3, 7, "8/21*v^6 + 8/63*v^7 + 1/63*v^8"},
};

constexpr PrintedTerm kCaseII[] = {
    {0, 0, "v"},
    {1, 1, "2*v - 3*v^2"},
    {2, 2, "2*v - 3*v^2"},
    {2, 3, "-4*v^2 + 12*v^3 - 9*v^4"},
    {3, 3, "4/3*v - 2*v^2"},
    {3, 4, "-2*v^2"},
    {3, 5, "-12/5*v^2"},
    {3, 4, "6*v^3"},
    {3, 5, "36/5*v^3"},
    {3, 6, "8*v^3"},
    {3, 4, "-9/2*v^4"},
    {3, 5, "-27/5*v^4"},
    {3, 6, "-36*v^4"},
    {3, 7, "-48/7*v^4"},
    {3, 6, "54*v^5"},
    {3, 7, "288/7*v^5"},
    {3, 6, "-27*v^6"},
    {3, 7, "-648/7*v^6 + 648/7*v^7 - 243/7*v^8"},
};

constexpr PrintedTerm kCaseIII[] = {
    {0, 0, "1/3*sqrt(6)*v^2/(v + v^2)"},
    {1, 1, "-2*(1/3*sqrt(6))*v^6/(v + v^2)^3"},
    {1, 1, "2*sqrt(6)*v^2/(v + v^2)"},
    {1, 1, "-4*(1/3*sqrt(6))*v^2*(v + 2*v^2)/(v + v^2)^2"},
    {1, 1, "(1/3*sqrt(6))*v^2*(2*(v + 2*v^2)^2/(v + v^2)^3 - (v + 4*v^2)/(v + v^2)^2)"},
    {2, 2, "3*(1/2*sqrt(6))*v*(1 + v^2)/(1 + v)^4"},
    {2, 4, "-9*(1/2*sqrt(6))*v^3/(1 + v)^6"},
    {3, 3, "(1/2*sqrt(6))*v*(3 - 6*v + 22*v^2 - 6*v^3 + 3*v^4)/(1 + v)^6"},
    {3, 5, "-9*(1/2*sqrt(6))*v^3*(11 - 20*v + 11*v^2)/(5*(1 + v)^8)"},
    {3, 7, "-243*(1/2*sqrt(6))*v^3*(1 + v^2)^3/(14*(1 + v)^12)"},
    {3, 9, "243*(1/2*sqrt(6))*v^5*(1 + v^2)^2/(2*(1 + v)^14)"},
    {3, 11, "-6561*(1/2*sqrt(6))*v^7*(1 + v^2)/(22*(1 + v)^16)"},
    {3, 13, "6561*(1/2*sqrt(6))*v^9/(26*(1 + v)^18)"},
};

template <std::size_t Count>
std::vector<TimeSeries> build_printed(const PrintedTerm (&terms)[Count], const Context& ctx) {
    int max_mu = 0;
    for (const auto& t : terms) max_mu = std::max(max_mu, t.mu);
    std::vector<int> orders(static_cast<std::size_t>(max_mu) + 1, 0);
    for (const auto& t : terms) orders[static_cast<std::size_t>(t.mu)] = std::max(orders[static_cast<std::size_t>(t.mu)], t.power);
    std::vector<TimeSeries> out;
    for (int k = 0; k <= max_mu; ++k) out.emplace_back(ctx, orders[static_cast<std::size_t>(k)]);
    for (const auto& t : terms) {
        auto& series = out[static_cast<std::size_t>(t.mu)];
        series.set(t.power, series[t.power] + parse_ring_element(t.expr, ctx));
    }
    return out;
}

}  // namespace

std::optional<CaseId> parse_case_id(std::string_view text) {
    if (text.starts_with("case-")) text.remove_prefix(5);
    if (text == "I") return CaseId::I;
    if (text == "II") return CaseId::II;
    if (text == "III") return CaseId::III;
    return std::nullopt;
}

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::I: return "case-I";
        case CaseId::II: return "case-II";
        case CaseId::III: return "case-III";
    }
    return "case-?";
}

Context case_context(CaseId id) {
    if (id == CaseId::III) return Context{6, DerivationMode::exponential(BigRational(1))};
    return Context{1, DerivationMode::constant()};
}

ProblemSpec preset(CaseId id, int order, int iterations) {
    ProblemSpec spec;
    spec.context = case_context(id);
    spec.order = order;
    spec.iterations = iterations;
    switch (id) {
        case CaseId::I:
            spec.a = 5;
            spec.b = 2;
            spec.c = -1;
            spec.n = 2;
            spec.phi = RingElement::symbol(spec.context);
            break;
        case CaseId::II:
            spec.a = 1;
            spec.b = 2;
            spec.c = 3;
            spec.n = 2;
            spec.phi = RingElement::symbol(spec.context);
            break;
        case CaseId::III:
            spec.a = 1;
            spec.b = 2;
            spec.c = 3;
            spec.n = 3;
            // sqrt(2/3) e^{2x}/(e^x + e^{2x}) = sqrt(2/3) v/(1 + v)
            spec.phi = parse_ring_element("1/3*sqrt(6)*v/(1 + v)", spec.context);
            break;
    }
    return spec;
}

std::optional<CaseId> match_preset(const ProblemSpec& spec) {
    if (spec.source && !spec.source->is_zero()) return std::nullopt;
    for (CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
        const ProblemSpec p = preset(id, spec.order, spec.iterations);
        if (p.a == spec.a && p.b == spec.b && p.c == spec.c && p.n == spec.n && p.context == spec.context &&
            p.phi == spec.phi) {
            return id;
        }
    }
    return std::nullopt;
}

std::vector<TimeSeries> printed_increments(CaseId id) {
    const Context ctx = case_context(id);
    switch (id) {
        case CaseId::I: return build_printed(kCaseI, ctx);
        case CaseId::II: return build_printed(kCaseII, ctx);
        case CaseId::III: return build_printed(kCaseIII, ctx);
    }
    return {};
}

}  // namespace pitm
