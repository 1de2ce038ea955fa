#include "pitm/rk4.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "pitm/errors.hpp"
#include "pitm/numeric.hpp"

namespace pitm {
namespace {

constexpr double kStabilitySafety = 0.9;

std::vector<double> uniform(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = count > 1 ? lo + (hi - lo) * i / (count - 1) : lo;
    }
    return out;
}

double max_stable_step(double dx, double diffusion) { return kStabilitySafety * dx * dx / (2.0 * diffusion); }

}  // namespace

int stable_substeps(const GridParams& grid, double diffusion) {
    if (grid.nt < 2 || grid.nx < 3) return 1;
    const double bound = max_stable_step(grid.dx(), diffusion);
    return std::max(1, static_cast<int>(std::ceil(grid.dt() / bound - 1e-12)));
}

GridSolution rk4_reference(const ProblemSpec& spec, const GridParams& grid, double v_value,
                           const BoundaryFn& boundary) {
    if (grid.nt < 1 || grid.nx < 1) throw ConfigError("grid needs at least one point in x and t");
    if (grid.substeps < 1) throw ConfigError("substeps must be >= 1");
    if (grid.t_max < 0.0) throw ConfigError("t_max must be >= 0");

    const bool spatial = !spec.context.mode.is_constant();
    const double a = spec.a.get_d();
    const double b = spec.b.get_d();
    const double c = spec.c.get_d();
    const int power = spec.n;
    const double rate = spec.context.mode.rate().get_d();

    GridSolution sol;
    sol.t_grid = uniform(0.0, grid.t_max, grid.nt);
    if (spatial) {
        if (grid.nx < 3) throw ConfigError("method of lines needs nx >= 3");
        if (!(grid.x_max > grid.x_min)) throw ConfigError("x_max must exceed x_min");
        if (!boundary) throw ConfigError("Exponential-mode reference needs boundary data");
        sol.x_grid = uniform(grid.x_min, grid.x_max, grid.nx);
    } else {
        sol.x_grid = {grid.x_min};
    }
    const std::size_t nx = sol.x_grid.size();
    sol.values.assign(nx * sol.t_grid.size(), 0.0);

    const double h = grid.dt() / grid.substeps;
    const double dx = grid.dx();
    if (spatial && grid.nt > 1 && h > max_stable_step(dx, a)) {
        std::ostringstream msg;
        msg << "RK4 step " << h << " exceeds the stability bound " << max_stable_step(dx, a)
            << " = 0.9*dx^2/(2a); raise substeps or nt";
        throw ConfigError(msg.str());
    }

    std::vector<double> u(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        const double v = spatial ? std::exp(rate * sol.x_grid[i]) : v_value;
        u[i] = spec.phi.eval(v);
    }

    std::optional<NumericSeries> source;
    if (spec.source && !spec.source->is_zero()) source.emplace(*spec.source);
    std::vector<double> forcing(nx, 0.0);
    auto update_forcing = [&](double tau) {
        if (!source) return;
        for (std::size_t i = 0; i < nx; ++i) forcing[i] = (*source)(sol.x_grid[i], tau, v_value);
    };

    auto reaction = [&](double y) { return b * y - c * std::pow(y, power); };
    // du/dt at time tau; boundary nodes follow their Dirichlet data.
    auto rhs = [&](double tau, const std::vector<double>& y, std::vector<double>& dy) {
        update_forcing(tau);
        if (!spatial) {
            dy[0] = reaction(y[0]) + forcing[0];
            return;
        }
        const double inv_dx2 = 1.0 / (dx * dx);
        const double left = boundary(sol.x_grid.front(), tau);
        const double right = boundary(sol.x_grid.back(), tau);
        dy[0] = 0.0;
        dy[nx - 1] = 0.0;
        for (std::size_t i = 1; i + 1 < nx; ++i) {
            const double ym = i == 1 ? left : y[i - 1];
            const double yp = i + 2 == nx ? right : y[i + 1];
            dy[i] = a * (ym - 2.0 * y[i] + yp) * inv_dx2 + reaction(y[i]) + forcing[i];
        }
    };

    std::vector<double> k1(nx), k2(nx), k3(nx), k4(nx), stage(nx);
    auto store = [&](std::size_t j) {
        for (std::size_t i = 0; i < nx; ++i) sol.value(i, j) = u[i];
    };
    store(0);
    double t = 0.0;
    for (std::size_t j = 1; j < sol.t_grid.size(); ++j) {
        for (int s = 0; s < grid.substeps; ++s) {
            rhs(t, u, k1);
            for (std::size_t i = 0; i < nx; ++i) stage[i] = u[i] + 0.5 * h * k1[i];
            rhs(t + 0.5 * h, stage, k2);
            for (std::size_t i = 0; i < nx; ++i) stage[i] = u[i] + 0.5 * h * k2[i];
            rhs(t + 0.5 * h, stage, k3);
            for (std::size_t i = 0; i < nx; ++i) stage[i] = u[i] + h * k3[i];
            rhs(t + h, stage, k4);
            for (std::size_t i = 0; i < nx; ++i) u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            t = sol.t_grid[j - 1] + (s + 1) * h;
        }
        t = sol.t_grid[j];
        if (spatial) {
            u.front() = boundary(sol.x_grid.front(), t);
            u.back() = boundary(sol.x_grid.back(), t);
        }
        for (double y : u) {
            if (!std::isfinite(y)) {
                std::ostringstream msg;
                msg << "RK4 reference diverged before t = " << t;
                throw DivergenceError(msg.str());
            }
        }
        store(j);
    }
    return sol;
}

CompareReport compare(const GridSolution& grid, const std::function<double(double, double)>& reference,
                      double t_trust) {
    CompareReport report;
    double sum_sq = 0.0;
    for (std::size_t j = 0; j < grid.t_grid.size(); ++j) {
        const double t = grid.t_grid[j];
        if (t > t_trust * (1.0 + 1e-12)) break;
        for (std::size_t i = 0; i < grid.x_grid.size(); ++i) {
            const double err = std::abs(reference(grid.x_grid[i], t) - grid.value(i, j));
            sum_sq += err * err;
            ++report.points;
            if (err > report.max_abs) {
                report.max_abs = err;
                report.worst_x = grid.x_grid[i];
                report.worst_t = t;
            }
        }
    }
    if (report.points > 0) report.rms = std::sqrt(sum_sq / static_cast<double>(report.points));
    return report;
}

CompareReport compare(const TimeSeries& series, const GridSolution& grid, double v_value, double t_trust) {
    const NumericSeries numeric(series);
    return compare(grid, [&](double x, double t) { return numeric(x, t, v_value); }, t_trust);
}

void write_csv(std::ostream& out, const GridSolution& grid, const char* first_column) {
    out << first_column << ",t,u\n";
    char line[128];
    for (std::size_t j = 0; j < grid.t_grid.size(); ++j) {
        for (std::size_t i = 0; i < grid.x_grid.size(); ++i) {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", grid.x_grid[i], grid.t_grid[j], grid.value(i, j));
            out << line;
        }
    }
}

}  // namespace pitm
