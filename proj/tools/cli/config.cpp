#include "cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pitm/errors.hpp"
#include "pitm/text.hpp"

namespace pitm::cli {
namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& object, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.contains(key)) field_error(path.empty() ? key : path + "." + key, "unknown field");
    }
}

const json& require_object(const json& parent, const char* key, const std::string& path) {
    if (!parent.contains(key)) field_error(path, "missing field");
    const json& value = parent.at(key);
    if (!value.is_object()) field_error(path, "expected an object");
    return value;
}

BigRational exact_field(const json& value, const std::string& path) {
    if (value.is_number_integer()) return BigRational(value.get<long>());
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            field_error(path, e.what());
        }
    }
    field_error(path, "expected a rational string \"p/q\" or an integer (floats would lose exactness)");
}

int int_field(const json& value, const std::string& path) {
    if (!value.is_number_integer()) field_error(path, "expected an integer");
    return value.get<int>();
}

double float_field(const json& value, const std::string& path) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        try {
            return parse_number(value.get<std::string>());
        } catch (const Error& e) {
            field_error(path, e.what());
        }
    }
    field_error(path, "expected a number");
}

bool bool_field(const json& value, const std::string& path) {
    if (!value.is_boolean()) field_error(path, "expected true or false");
    return value.get<bool>();
}

RingElement element_field(const json& value, const Context& ctx, const std::string& path) {
    if (value.is_number_integer()) return RingElement(Scalar(BigRational(value.get<long>()), ctx.d), ctx);
    if (!value.is_string()) field_error(path, "expected an expression string in v");
    try {
        return parse_ring_element(value.get<std::string>(), ctx);
    } catch (const Error& e) {
        field_error(path, e.what());
    }
}

ProblemSpec parse_problem(const json& p) {
    reject_unknown(p, "problem", {"a", "b", "c", "n", "mode", "rate", "d", "phi", "source", "N", "K"});
    for (const char* key : {"a", "b", "c", "n", "phi", "N", "K"}) {
        if (!p.contains(key)) field_error(std::string("problem.") + key, "missing field");
    }
    ProblemSpec spec;
    spec.a = exact_field(p.at("a"), "problem.a");
    spec.b = exact_field(p.at("b"), "problem.b");
    spec.c = exact_field(p.at("c"), "problem.c");
    spec.n = int_field(p.at("n"), "problem.n");
    spec.order = int_field(p.at("N"), "problem.N");
    spec.iterations = int_field(p.at("K"), "problem.K");

    std::int64_t d = 1;
    if (p.contains("d")) {
        d = int_field(p.at("d"), "problem.d");
        if (!is_square_free(d)) field_error("problem.d", "must be a positive square-free integer");
    }
    DerivationMode mode = DerivationMode::constant();
    const std::string mode_name = p.contains("mode") && p.at("mode").is_string() ? p.at("mode").get<std::string>()
                                  : p.contains("mode") ? "<non-string>"
                                                       : "constant";
    if (mode_name == "exponential") {
        mode = DerivationMode::exponential(p.contains("rate") ? exact_field(p.at("rate"), "problem.rate")
                                                              : BigRational(1));
        if (sgn(mode.rate()) == 0) field_error("problem.rate", "must be nonzero");
    } else if (mode_name != "constant") {
        field_error("problem.mode", "expected \"constant\" or \"exponential\"");
    } else if (p.contains("rate")) {
        field_error("problem.rate", "only valid with mode \"exponential\"");
    }
    spec.context = Context{d, mode};
    spec.phi = element_field(p.at("phi"), spec.context, "problem.phi");

    if (p.contains("source")) {
        const json& src = p.at("source");
        if (!src.is_array()) field_error("problem.source", "expected an array of coefficients of t^0, t^1, ...");
        const int order = std::max(spec.order, static_cast<int>(src.size()) - 1);
        if (order >= 0 && !src.empty()) {
            TimeSeries h(spec.context, order);
            for (std::size_t j = 0; j < src.size(); ++j) {
                h.set(static_cast<int>(j),
                      element_field(src[j], spec.context, "problem.source[" + std::to_string(j) + "]"));
            }
            if (!h.is_zero()) spec.source = std::move(h);
        }
    }
    try {
        validate(spec);
    } catch (const ConfigError& e) {
        field_error("problem", e.what());
    }
    return spec;
}

GridParams parse_grid(const json& g) {
    reject_unknown(g, "grid", {"x_min", "x_max", "nx", "t_max", "nt"});
    GridParams grid;
    if (g.contains("x_min")) grid.x_min = float_field(g.at("x_min"), "grid.x_min");
    if (g.contains("x_max")) grid.x_max = float_field(g.at("x_max"), "grid.x_max");
    if (g.contains("nx")) grid.nx = int_field(g.at("nx"), "grid.nx");
    if (g.contains("t_max")) grid.t_max = float_field(g.at("t_max"), "grid.t_max");
    if (g.contains("nt")) grid.nt = int_field(g.at("nt"), "grid.nt");
    if (grid.nx < 1) field_error("grid.nx", "must be >= 1");
    if (grid.nt < 1) field_error("grid.nt", "must be >= 1");
    if (grid.x_max < grid.x_min) field_error("grid.x_max", "must be >= x_min");
    if (grid.t_max < 0) field_error("grid.t_max", "must be >= 0");
    return grid;
}

}  // namespace

double parse_number(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("invalid number '" + s + "'");
    }
    if (used != s.size()) throw ParseError("invalid number '" + s + "'");
    return value;
}

RunConfig parse_run_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // Convert the byte offset into a line/column pair.
        std::size_t line = 1, column = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, json_text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (json_text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream msg;
        msg << "line " << line << ", column " << column << ": invalid JSON";
        throw ConfigError(msg.str());
    }
    if (!doc.is_object()) throw ConfigError("line 1, column 1: expected a JSON object");
    reject_unknown(doc, "", {"problem", "grid", "lambda_value", "outputs", "t_trust"});

    RunConfig config;
    config.problem = parse_problem(require_object(doc, "problem", "problem"));
    if (doc.contains("grid")) config.grid = parse_grid(require_object(doc, "grid", "grid"));
    if (doc.contains("lambda_value")) config.lambda_value = float_field(doc.at("lambda_value"), "lambda_value");
    if (doc.contains("t_trust")) config.t_trust = float_field(doc.at("t_trust"), "t_trust");
    if (doc.contains("outputs")) {
        const json& o = require_object(doc, "outputs", "outputs");
        reject_unknown(o, "outputs", {"series_dump", "csv", "plot_script", "verify_report"});
        if (o.contains("series_dump")) config.outputs.series_dump = bool_field(o.at("series_dump"), "outputs.series_dump");
        if (o.contains("csv")) config.outputs.csv = bool_field(o.at("csv"), "outputs.csv");
        if (o.contains("plot_script")) config.outputs.plot_script = bool_field(o.at("plot_script"), "outputs.plot_script");
        if (o.contains("verify_report")) {
            config.outputs.verify_report = bool_field(o.at("verify_report"), "outputs.verify_report");
        }
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_run_config(buf.str());
    } catch (const Error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace pitm::cli
