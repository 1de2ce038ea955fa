#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "pitm/engine.hpp"

namespace pitm {

struct GridParams {
    double x_min = -5.0;
    double x_max = 5.0;
    int nx = 101;
    double t_max = 0.5;
    int nt = 101;
    /// RK4 steps taken between consecutive output times.
    int substeps = 1;

    double dx() const { return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0; }
    double dt() const { return nt > 1 ? t_max / (nt - 1) : 0.0; }
};

/// Smallest substep count keeping an Exponential-mode run under the explicit
/// stability bound dt <= 0.9 * dx^2 / (2a).
int stable_substeps(const GridParams& grid, double diffusion);

/// Uniform (x, t) grid of solution values, value(i, j) = u(x_i, t_j).
struct GridSolution {
    std::vector<double> x_grid;
    std::vector<double> t_grid;
    std::vector<double> values;

    double value(std::size_t i, std::size_t j) const { return values[j * x_grid.size() + i]; }
    double& value(std::size_t i, std::size_t j) { return values[j * x_grid.size() + i]; }
};

/// Dirichlet data u(x, t) at the two ends of the x-grid.
using BoundaryFn = std::function<double(double x, double t)>;

/// Classical RK4 in t. Constant-mode problems are a scalar ODE on a one-point
/// x-grid at x_min; Exponential-mode problems use second-order central
/// differences for u_xx with Dirichlet values from `boundary`.
///
/// Throws ConfigError when the effective step dt/substeps exceeds the
/// stability bound or the grid is degenerate, DivergenceError on non-finite
/// values.
GridSolution rk4_reference(const ProblemSpec& spec, const GridParams& grid, double v_value,
                           const BoundaryFn& boundary = {});

struct CompareReport {
    double max_abs = 0.0;
    double rms = 0.0;
    std::size_t points = 0;
    double worst_x = 0.0;
    double worst_t = 0.0;
};

/// Error of the evaluated series against grid values for t <= t_trust.
CompareReport compare(const TimeSeries& series, const GridSolution& grid, double v_value, double t_trust);

/// Same statistics against an arbitrary reference function.
CompareReport compare(const GridSolution& grid, const std::function<double(double, double)>& reference,
                      double t_trust);

/// "x,t,u" header, t outer and x inner, 17 significant digits.
void write_csv(std::ostream& out, const GridSolution& grid, const char* first_column = "x");

}  // namespace pitm
