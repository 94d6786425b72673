#pragma once

#include <cstddef>
#include <vector>

namespace bws {

/// Uniform staggered discretization of the wave tank [0, domain_length].
/// Scalars live on the n_nodes grid points, velocities on the midpoints.
struct StaggeredGrid {
    double domain_length = 0.0;
    double dx = 0.0;
    std::size_t n_nodes = 0;
    std::vector<double> node_coords;
    std::vector<double> mid_coords;

    std::size_t n_mids() const { return n_nodes - 1; }
    double node(std::size_t i) const { return node_coords[i]; }
    double mid(std::size_t i) const { return mid_coords[i]; }
};

/// Builds the tank grid with round(domain_length/dx) cells. Rejects
/// non-positive inputs and grids with fewer than 8 nodes (the stencil
/// neighbourhoods need four points per side).
StaggeredGrid build_grid(double domain_length, double dx);

/// Truncated Gaussian bottom profile. The stored profile is the
/// nondimensional bottom elevation: peak value `amplitude` (= beta),
/// cut to zero where it falls below truncation_tol.
struct Bathymetry {
    double amplitude = 0.0;       // peak elevation (bottom parameter beta)
    double shape_scale = 1.0;     // Gaussian length scale
    double center = 0.0;          // resting position of the peak
    double truncation_tol = 1e-4;
    double support_half_width = 0.0;

    // Analytic evaluations of the resting profile and its derivatives.
    // Zero outside the closed support [center - hw, center + hw].
    double height(double x) const;
    double slope(double x) const;
    double curvature(double x) const;
    double third_derivative(double x) const;

    double support_left(double shift = 0.0) const { return center + shift - support_half_width; }
    double support_right(double shift = 0.0) const { return center + shift + support_half_width; }

    /// Exact integral of the untruncated Gaussian over the support
    /// (high-accuracy reference, not used by the solver path).
    double analytic_integral() const;
};

Bathymetry gaussian_bottom(double beta, double shape_scale, double center, double truncation_tol);

/// Bottom profile and derivatives sampled on the grid for solid shift X.
/// All entries are analytic evaluations of the translated profile;
/// nothing is finite-differenced from sampled values.
struct BottomFields {
    std::vector<double> b_nodes;    // elevation at nodes
    std::vector<double> b_mids;     // elevation at midpoints
    std::vector<double> db_nodes;   // d/dx elevation at nodes
    std::vector<double> db_mids;    // d/dx elevation at midpoints
    std::vector<double> d2b_mids;   // d2/dx2 elevation at midpoints
    std::vector<double> d3b_mids;   // d3/dx3 elevation at midpoints
    double support_left = 0.0;
    double support_right = 0.0;
};

/// True when the translated support lies strictly inside the tank.
bool support_inside(const Bathymetry& bathy, double shift, const StaggeredGrid& grid);

/// Samples the translated bottom on the grid. Throws std::runtime_error
/// ("solid touched boundary") when the translated support reaches a wall.
BottomFields sample_bottom(const Bathymetry& bathy, double shift, const StaggeredGrid& grid);

/// In-place refresh of previously sampled fields: clears the stale support
/// range and fills the new one. Fields must be sized for `grid`.
void resample_bottom(const Bathymetry& bathy, double shift, const StaggeredGrid& grid,
                     BottomFields& fields);

/// Node indices bracketing [a, b] from outside: j = highest node <= a,
/// k = lowest node >= b, clamped to the grid.
void support_node_range(const StaggeredGrid& grid, double a, double b,
                        std::size_t& j, std::size_t& k);

}  // namespace bws
