#include "bws/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bws {

StaggeredGrid build_grid(double domain_length, double dx) {
    if (!(domain_length > 0.0) || !(dx > 0.0))
        throw std::invalid_argument("build_grid: domain_length and dx must be positive");
    const std::size_t cells = static_cast<std::size_t>(std::llround(domain_length / dx));
    if (cells + 1 < 8)
        throw std::invalid_argument("build_grid: grid too coarse, need at least 8 nodes");
    StaggeredGrid g;
    g.domain_length = domain_length;
    g.dx = dx;
    g.n_nodes = cells + 1;
    g.node_coords.resize(g.n_nodes);
    g.mid_coords.resize(cells);
    for (std::size_t i = 0; i < g.n_nodes; ++i) g.node_coords[i] = static_cast<double>(i) * dx;
    for (std::size_t i = 0; i < cells; ++i) g.mid_coords[i] = g.node_coords[i] + dx / 2.0;
    return g;
}

double Bathymetry::height(double x) const {
    const double y = x - center;
    if (std::abs(y) > support_half_width) return 0.0;
    const double a = 10.0 / (shape_scale * shape_scale);
    return amplitude * std::exp(-a * y * y);
}

double Bathymetry::slope(double x) const {
    const double y = x - center;
    if (std::abs(y) > support_half_width) return 0.0;
    const double a = 10.0 / (shape_scale * shape_scale);
    return amplitude * std::exp(-a * y * y) * (-2.0 * a * y);
}

double Bathymetry::curvature(double x) const {
    const double y = x - center;
    if (std::abs(y) > support_half_width) return 0.0;
    const double a = 10.0 / (shape_scale * shape_scale);
    return amplitude * std::exp(-a * y * y) * (4.0 * a * a * y * y - 2.0 * a);
}

double Bathymetry::third_derivative(double x) const {
    const double y = x - center;
    if (std::abs(y) > support_half_width) return 0.0;
    const double a = 10.0 / (shape_scale * shape_scale);
    return amplitude * std::exp(-a * y * y) * (12.0 * a * a * y - 8.0 * a * a * a * y * y * y);
}

double Bathymetry::analytic_integral() const {
    const double a = 10.0 / (shape_scale * shape_scale);
    const double r = support_half_width;
    return amplitude * std::sqrt(M_PI / a) * std::erf(std::sqrt(a) * r);
}

Bathymetry gaussian_bottom(double beta, double shape_scale, double center, double truncation_tol) {
    if (!(beta > 0.0) || !(shape_scale > 0.0))
        throw std::invalid_argument("gaussian_bottom: beta and shape_scale must be positive");
    if (!(truncation_tol > 0.0) || !(truncation_tol < beta))
        throw std::invalid_argument("gaussian_bottom: need 0 < truncation_tol < beta");
    Bathymetry b;
    b.amplitude = beta;
    b.shape_scale = shape_scale;
    b.center = center;
    b.truncation_tol = truncation_tol;
    b.support_half_width = shape_scale * std::sqrt(std::log(beta / truncation_tol) / 10.0);
    return b;
}

bool support_inside(const Bathymetry& bathy, double shift, const StaggeredGrid& grid) {
    return bathy.support_left(shift) > 0.0 && bathy.support_right(shift) < grid.domain_length;
}

void support_node_range(const StaggeredGrid& grid, double a, double b,
                        std::size_t& j, std::size_t& k) {
    const double dx = grid.dx;
    long lo = static_cast<long>(std::floor(a / dx));
    long hi = static_cast<long>(std::ceil(b / dx));
    lo = std::clamp(lo, 0L, static_cast<long>(grid.n_nodes - 1));
    hi = std::clamp(hi, 0L, static_cast<long>(grid.n_nodes - 1));
    if (hi <= lo) hi = std::min(lo + 1, static_cast<long>(grid.n_nodes - 1));
    j = static_cast<std::size_t>(lo);
    k = static_cast<std::size_t>(hi);
}

namespace {

void fill_range(const Bathymetry& bathy, double shift, const StaggeredGrid& grid,
                BottomFields& f) {
    const double left = bathy.support_left(shift);
    const double right = bathy.support_right(shift);
    const double dx = grid.dx;

    const long n = static_cast<long>(grid.n_nodes);
    const long m = static_cast<long>(grid.n_mids());

    long i0 = std::clamp(static_cast<long>(std::floor(left / dx)) - 1, 0L, n - 1);
    long i1 = std::clamp(static_cast<long>(std::ceil(right / dx)) + 1, 0L, n - 1);
    for (long i = i0; i <= i1; ++i) {
        const double x = grid.node_coords[i] - shift;
        f.b_nodes[i] = bathy.height(x);
        f.db_nodes[i] = bathy.slope(x);
    }
    long j0 = std::clamp(i0, 0L, m - 1);
    long j1 = std::clamp(i1, 0L, m - 1);
    for (long i = j0; i <= j1; ++i) {
        const double x = grid.mid_coords[i] - shift;
        f.b_mids[i] = bathy.height(x);
        f.db_mids[i] = bathy.slope(x);
        f.d2b_mids[i] = bathy.curvature(x);
        f.d3b_mids[i] = bathy.third_derivative(x);
    }
    f.support_left = left;
    f.support_right = right;
}

void clear_range(const StaggeredGrid& grid, BottomFields& f) {
    const double dx = grid.dx;
    const long n = static_cast<long>(grid.n_nodes);
    const long m = static_cast<long>(grid.n_mids());
    long i0 = std::clamp(static_cast<long>(std::floor(f.support_left / dx)) - 1, 0L, n - 1);
    long i1 = std::clamp(static_cast<long>(std::ceil(f.support_right / dx)) + 1, 0L, n - 1);
    for (long i = i0; i <= i1; ++i) {
        f.b_nodes[i] = 0.0;
        f.db_nodes[i] = 0.0;
    }
    long j0 = std::clamp(i0, 0L, m - 1);
    long j1 = std::clamp(i1, 0L, m - 1);
    for (long i = j0; i <= j1; ++i) {
        f.b_mids[i] = 0.0;
        f.db_mids[i] = 0.0;
        f.d2b_mids[i] = 0.0;
        f.d3b_mids[i] = 0.0;
    }
}

}  // namespace

BottomFields sample_bottom(const Bathymetry& bathy, double shift, const StaggeredGrid& grid) {
    if (!std::isfinite(shift)) throw std::invalid_argument("sample_bottom: shift must be finite");
    if (!support_inside(bathy, shift, grid))
        throw std::runtime_error("solid touched boundary");
    BottomFields f;
    f.b_nodes.assign(grid.n_nodes, 0.0);
    f.db_nodes.assign(grid.n_nodes, 0.0);
    f.b_mids.assign(grid.n_mids(), 0.0);
    f.db_mids.assign(grid.n_mids(), 0.0);
    f.d2b_mids.assign(grid.n_mids(), 0.0);
    f.d3b_mids.assign(grid.n_mids(), 0.0);
    fill_range(bathy, shift, grid, f);
    return f;
}

void resample_bottom(const Bathymetry& bathy, double shift, const StaggeredGrid& grid,
                     BottomFields& fields) {
    if (!support_inside(bathy, shift, grid))
        throw std::runtime_error("solid touched boundary");
    clear_range(grid, fields);
    fill_range(bathy, shift, grid, fields);
}

}  // namespace bws
