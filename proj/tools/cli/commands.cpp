#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "pitm/pitm.hpp"

namespace pitm::cli {
namespace {

namespace fs = std::filesystem;

enum class Axes { XT, LambdaT };

struct GridFlags {
    double x_min = -5.0;
    double x_max = 5.0;
    int nx = 101;
    double t_max = 0.5;
    int nt = 101;
    std::optional<double> t_trust;
    std::string lambda = "0.1";
};

void add_grid_flags(CLI::App& cmd, GridFlags& flags) {
    cmd.add_option("--xmin", flags.x_min, "Left end of the x (or lambda) range");
    cmd.add_option("--xmax", flags.x_max, "Right end of the x (or lambda) range");
    cmd.add_option("--nx", flags.nx, "Number of x points");
    cmd.add_option("--tmax", flags.t_max, "Final time");
    cmd.add_option("--nt", flags.nt, "Number of time points");
    cmd.add_option("--t-trust", flags.t_trust, "Only compare/trust the series for t <= this value");
    cmd.add_option("--lambda", flags.lambda, "lambda for Constant-mode problems (p/q or float)");
}

GridParams to_grid(const GridFlags& flags) {
    if (flags.nx < 1) throw ConfigError("--nx must be >= 1");
    if (flags.nt < 1) throw ConfigError("--nt must be >= 1");
    if (flags.x_max < flags.x_min) throw ConfigError("--xmax must be >= --xmin");
    if (flags.t_max < 0) throw ConfigError("--tmax must be >= 0");
    GridParams grid;
    grid.x_min = flags.x_min;
    grid.x_max = flags.x_max;
    grid.nx = flags.nx;
    grid.t_max = flags.t_max;
    grid.nt = flags.nt;
    return grid;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
}

ProblemSpec case_spec(const std::string& id_text, int order, std::optional<int> iterations) {
    const auto id = parse_case_id(id_text);
    if (!id) throw ConfigError("unknown case '" + id_text + "' (expected I, II or III)");
    if (order < 0) throw ConfigError("--order must be >= 0");
    ProblemSpec spec = preset(*id, order, iterations.value_or(order));
    validate(spec);
    return spec;
}

void write_series_outputs(const ProblemSpec& spec, const IterationReport& report, const fs::path& dir,
                          bool series_dump, bool sdomain, bool summary) {
    if (series_dump) {
        write_file(dir / "increments.txt", format_dump(spec, report, DumpKind::Increments));
        write_file(dir / "totals.txt", format_dump(spec, report, DumpKind::Totals));
    }
    if (sdomain) write_file(dir / "sdomain.txt", format_dump(spec, report, DumpKind::SDomain));
    if (summary) write_file(dir / "verify.txt", format_summary(spec, report));
}

std::string fmt(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

/// Evaluates the series on the grid; throws EvaluationSingularity with (x, t).
GridSolution evaluate_grid(const TimeSeries& series, const GridParams& grid, double lambda, Axes axes) {
    GridSolution sol;
    const NumericSeries numeric(series);
    for (int i = 0; i < grid.nx; ++i) {
        sol.x_grid.push_back(grid.nx > 1 ? grid.x_min + (grid.x_max - grid.x_min) * i / (grid.nx - 1) : grid.x_min);
    }
    for (int j = 0; j < grid.nt; ++j) {
        sol.t_grid.push_back(grid.nt > 1 ? grid.t_max * j / (grid.nt - 1) : 0.0);
    }
    sol.values.resize(sol.x_grid.size() * sol.t_grid.size());
    for (std::size_t j = 0; j < sol.t_grid.size(); ++j) {
        for (std::size_t i = 0; i < sol.x_grid.size(); ++i) {
            const double first = sol.x_grid[i];
            const double t = sol.t_grid[j];
            sol.value(i, j) = axes == Axes::LambdaT ? numeric(0.0, t, first) : numeric(first, t, lambda);
        }
    }
    return sol;
}

std::string exact_gnuplot_expression(CaseId id, Axes axes) {
    const std::string lam = axes == Axes::LambdaT ? "x" : "lambda";
    switch (id) {
        case CaseId::I: return "2*exp(2*y)*" + lam + "/(2 + (1 - exp(2*y))*" + lam + ")";
        case CaseId::II: return "2*exp(2*y)*" + lam + "/(2 + 3*" + lam + "*(exp(2*y) - 1))";
        case CaseId::III: return "sqrt(2.0/3.0)/(1 + exp(-(x + 3*y)))";
    }
    return "0";
}

std::string plot_script(const ProblemSpec& spec, const GridParams& grid, double lambda, Axes axes) {
    const auto id = match_preset(spec);
    const std::string title = id ? case_name(*id) : std::string("user problem");
    const std::string first = axes == Axes::LambdaT ? "lambda" : "x";
    std::ostringstream out;
    out << "# gnuplot script: PITM partial sum (N = " << spec.order << ", K = " << spec.iterations << ")";
    out << (id ? " and exact solution" : "") << " for " << title << "\n";
    if (axes == Axes::XT) out << "# lambda = " << fmt(lambda) << "\n";
    out << "# " << first << " in [" << fmt(grid.x_min) << ", " << fmt(grid.x_max) << "], t in [0, " << fmt(grid.t_max)
        << "], grid " << grid.nx << " x " << grid.nt << "\n";
    out << "# data: solution.csv (" << first << ",t,u)\n";
    out << "set datafile separator \",\"\n";
    out << "set key off\n";
    out << "set xlabel \"" << first << "\"\nset ylabel \"t\"\nset zlabel \"u\"\n";
    out << "set xrange [" << fmt(grid.x_min) << ":" << fmt(grid.x_max) << "]\n";
    out << "set yrange [0:" << fmt(grid.t_max) << "]\n";
    if (id) {
        out << "lambda = " << fmt(lambda) << "\n";
        out << "exact(x, y) = " << exact_gnuplot_expression(*id, axes) << "\n";
        out << "set multiplot layout 1,2 title \"" << title << "\"\n";
    }
    out << "set title \"PITM (approximate solution)\"\n";
    out << "splot \"solution.csv\" skip 1 using 1:2:3 with points pointtype 7 pointsize 0.3\n";
    if (id) {
        out << "set title \"exact solution\"\n";
        out << "set isosamples " << std::min(grid.nx, 60) << ", " << std::min(grid.nt, 60) << "\n";
        out << "splot exact(x, y) with lines\n";
        out << "unset multiplot\n";
    }
    return out.str();
}

void write_grid_outputs(const ProblemSpec& spec, const TimeSeries& series, const GridParams& grid, double lambda,
                        Axes axes, const fs::path& dir, bool csv, bool script) {
    if (csv) {
        const GridSolution sol = evaluate_grid(series, grid, lambda, axes);
        std::ostringstream buf;
        write_csv(buf, sol, axes == Axes::LambdaT ? "lambda" : "x");
        write_file(dir / "solution.csv", buf.str());
    }
    if (script) write_file(dir / "plot.gp", plot_script(spec, grid, lambda, axes));
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::path path(dir);
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
    return path;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncated time-series solutions of Newell-Whitehead-Segel equations by the perturbation "
                 "iteration transform method"};
    app.name("pitm");
    app.require_subcommand(1);

    // case
    std::string case_id;
    int order = 8;
    std::optional<int> iterations;
    std::string out_dir = ".";
    bool sdomain = false;
    auto* cmd_case = app.add_subcommand("case", "Solve a built-in case and dump iterates");
    cmd_case->add_option("id", case_id, "I, II or III")->required();
    cmd_case->add_option("--order,-N", order, "Truncation order N (built-in cases)");
    cmd_case->add_option("--iters,-K", iterations, "Iteration count K, default N (built-in cases)");
    cmd_case->add_option("--out", out_dir, "Output directory");
    cmd_case->add_flag("--sdomain", sdomain, "Also write Laplace images of the increments");

    // solve
    std::string config_path;
    auto* cmd_solve = app.add_subcommand("solve", "Solve the problem described by a JSON config");
    cmd_solve->add_option("config", config_path, "Config file")->required();
    cmd_solve->add_option("--out", out_dir, "Output directory");
    cmd_solve->add_flag("--sdomain", sdomain, "Also write Laplace images of the increments");

    // verify
    GridFlags verify_grid;
    verify_grid.nx = 1001;
    verify_grid.t_max = 0.2;
    verify_grid.nt = 2001;
    double tolerance = 1e-6;
    int substeps = 0;
    std::string golden_path;
    auto* cmd_verify = app.add_subcommand("verify", "Check a built-in case or a config problem against the oracles");
    cmd_verify->add_option("id", case_id, "I, II, III, or a config file (grid, lambda_value and t_trust from the file)")
        ->required();
    cmd_verify->add_option("--order,-N", order, "Truncation order N (built-in cases)");
    cmd_verify->add_option("--iters,-K", iterations, "Iteration count K, default N (built-in cases)");
    cmd_verify->add_option("--out", out_dir, "Output directory");
    cmd_verify->add_option("--tol", tolerance, "Max-abs tolerance of the RK4 comparisons");
    cmd_verify->add_option("--substeps", substeps, "RK4 steps per output time (0 = smallest stable count)");
    cmd_verify->add_option("--golden", golden_path, "Expected final partial sum (series text)");
    add_grid_flags(*cmd_verify, verify_grid);

    // plot
    GridFlags plot_grid;
    std::string axes_name = "x-t";
    auto* cmd_plot = app.add_subcommand("plot", "Evaluate a built-in case or a config problem on a grid and write a gnuplot script");
    cmd_plot->add_option("id", case_id, "I, II, III, or a config file (its problem section is used)")->required();
    cmd_plot->add_option("--order,-N", order, "Truncation order N (built-in cases)");
    cmd_plot->add_option("--iters,-K", iterations, "Iteration count K, default N (built-in cases)");
    cmd_plot->add_option("--out", out_dir, "Output directory");
    cmd_plot->add_option("--axes", axes_name, "x-t, or lambda-t for Constant-mode cases")
        ->check(CLI::IsMember({"x-t", "lambda-t"}));
    add_grid_flags(*cmd_plot, plot_grid);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "pitm: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (cmd_case->parsed()) {
            const ProblemSpec spec = case_spec(case_id, order, iterations);
            const fs::path dir = prepare_out_dir(out_dir);
            const IterationReport report = solve(spec);
            write_series_outputs(spec, report, dir, true, sdomain, true);
            out << format_summary(spec, report);
            return kSuccess;
        }
        if (cmd_solve->parsed()) {
            const RunConfig config = load_run_config(config_path);
            const fs::path dir = prepare_out_dir(out_dir);
            const IterationReport report = solve(config.problem);
            write_series_outputs(config.problem, report, dir, config.outputs.series_dump, sdomain,
                                 config.outputs.verify_report);
            write_grid_outputs(config.problem, report.solution(), config.grid, config.lambda_value, Axes::XT, dir,
                               config.outputs.csv, config.outputs.plot_script);
            out << format_summary(config.problem, report);
            return kSuccess;
        }
        if (cmd_verify->parsed()) {
            ProblemSpec spec;
            VerifyOptions options;
            if (parse_case_id(case_id)) {
                spec = case_spec(case_id, order, iterations);
                options.grid = to_grid(verify_grid);
                options.lambda = parse_number(verify_grid.lambda);
                options.t_trust = verify_grid.t_trust;
            } else {
                // A config file brings its own grid, lambda and t_trust; flags given
                // explicitly still win.
                const RunConfig config = load_run_config(case_id);
                spec = config.problem;
                GridFlags merged = verify_grid;
                const auto take = [&](const char* flag, auto& field, auto value) {
                    if (cmd_verify->count(flag) == 0) field = value;
                };
                take("--xmin", merged.x_min, config.grid.x_min);
                take("--xmax", merged.x_max, config.grid.x_max);
                take("--nx", merged.nx, config.grid.nx);
                take("--tmax", merged.t_max, config.grid.t_max);
                take("--nt", merged.nt, config.grid.nt);
                take("--t-trust", merged.t_trust, config.t_trust);
                options.grid = to_grid(merged);
                options.lambda = cmd_verify->count("--lambda") ? parse_number(verify_grid.lambda) : config.lambda_value;
                options.t_trust = merged.t_trust;
            }
            options.tolerance = tolerance;
            if (substeps < 0) throw ConfigError("--substeps must be >= 0");
            options.grid.substeps =
                substeps > 0 ? substeps : stable_substeps(options.grid, spec.a.get_d());
            if (!golden_path.empty()) {
                std::ifstream in(golden_path);
                if (!in) throw ConfigError("cannot read golden fixture '" + golden_path + "'");
                std::ostringstream buf;
                buf << in.rdbuf();
                options.golden = parse_series(buf.str(), spec.context);
            }
            const fs::path dir = prepare_out_dir(out_dir);
            const VerifyResult result = verify(spec, options);
            const std::string text = format_verify_report(spec, result, options);
            write_file(dir / "verify.txt", text);
            out << text;
            if (const auto* failure = result.first_failure()) {
                err << "pitm: verification failed: " << failure->name << ": " << failure->detail << "\n";
                return kVerificationFailed;
            }
            return kSuccess;
        }
        if (cmd_plot->parsed()) {
            const ProblemSpec spec = parse_case_id(case_id) ? case_spec(case_id, order, iterations)
                                                            : load_run_config(case_id).problem;
            const GridParams grid = to_grid(plot_grid);
            const double lambda = parse_number(plot_grid.lambda);
            const Axes axes = axes_name == "lambda-t" ? Axes::LambdaT : Axes::XT;
            if (axes == Axes::LambdaT && !spec.context.mode.is_constant()) {
                throw ConfigError("--axes lambda-t needs a Constant-mode problem");
            }
            const fs::path dir = prepare_out_dir(out_dir);
            const IterationReport report = solve(spec);
            write_grid_outputs(spec, report.solution(), grid, lambda, axes, dir, true, true);
            out << "wrote solution.csv (" << grid.nx * grid.nt << " rows) and plot.gp\n";
            return kSuccess;
        }
    } catch (const EvaluationSingularity& e) {
        err << "pitm: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const DivergenceError& e) {
        err << "pitm: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "pitm: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace pitm::cli
