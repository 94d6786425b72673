#include "bws/solid.hpp"

#include <cmath>
#include <stdexcept>

#include "bws/stencils.hpp"

namespace bws {

namespace {

// Simpson integral of zeta (or zeta * weight) over the translated support.
double support_integral(const std::vector<double>& zeta, const std::vector<double>& zeta_mids,
                        double left, double right, const StaggeredGrid& grid) {
    std::size_t j = 0, k = 0;
    support_node_range(grid, left, right, j, k);
    return simpson_support(zeta, zeta_mids, j, k, grid.dx);
}

}  // namespace

double compute_c_solid(const Bathymetry& bathy, const PhysicalParams& p,
                       const StaggeredGrid& grid) {
    std::size_t j = 0, k = 0;
    support_node_range(grid, bathy.support_left(), bathy.support_right(), j, k);
    std::vector<double> b_nodes(grid.n_nodes), b_mids(grid.n_mids());
    for (std::size_t i = j; i <= k; ++i) b_nodes[i] = bathy.height(grid.node(i));
    for (std::size_t i = j; i < k && i < grid.n_mids(); ++i) b_mids[i] = bathy.height(grid.mid(i));
    const double integral = simpson_support(b_nodes, b_mids, j, k, grid.dx);
    const double supp = 2.0 * bathy.support_half_width;
    return supp / p.m_tilde * p.atmospheric_factor() - integral / p.m_tilde;
}

double coeff_C(const std::vector<double>& zeta, const std::vector<double>& zeta_mids,
               double shift, const Bathymetry& bathy, const PhysicalParams& p,
               const StaggeredGrid& grid) {
    const double integral = support_integral(zeta, zeta_mids, bathy.support_left(shift),
                                             bathy.support_right(shift), grid);
    const double bracket =
        1.0 + p.c_solid / p.beta + p.eps / (p.m_tilde * p.beta) * integral;
    if (!(bracket > 0.0)) throw std::runtime_error("normal force non-positive");
    return p.c_fric / std::sqrt(p.mu) * bracket;
}

double coeff_Cbar(const std::vector<double>& zeta, const std::vector<double>& zeta_mids,
                  double shift, const Bathymetry& bathy, const PhysicalParams& p,
                  const StaggeredGrid& grid) {
    std::size_t j = 0, k = 0;
    support_node_range(grid, bathy.support_left(shift), bathy.support_right(shift), j, k);
    std::vector<double> f_nodes(grid.n_nodes, 0.0), f_mids(grid.n_mids(), 0.0);
    for (std::size_t i = j; i <= k; ++i)
        f_nodes[i] = zeta[i] * bathy.slope(grid.node(i) - shift);
    for (std::size_t i = j; i < k && i < grid.n_mids(); ++i)
        f_mids[i] = zeta_mids[i] * bathy.slope(grid.mid(i) - shift);
    const double integral = simpson_support(f_nodes, f_mids, j, k, grid.dx);
    return p.eps / (p.m_tilde * p.beta) * integral;
}

double solid_step(const SolidState& s, double C, double Cbar, double dt, double delta) {
    const double denom_abs = std::abs(3.0 * s.x_curr - 4.0 * s.x_prev + s.x_prev2) +
                             2.0 * dt * delta;
    const double K = dt * dt * C / denom_abs;
    return (2.0 * s.x_curr - (1.0 - K) * s.x_prev + dt * dt * Cbar) / (1.0 + K);
}

void solid_kinematics(const SolidState& s, double x_next, double dt,
                      double& v_central, double& a_central, double& v_backward) {
    v_central = (x_next - s.x_prev) / (2.0 * dt);
    a_central = (x_next - 2.0 * s.x_curr + s.x_prev) / (dt * dt);
    v_backward = (3.0 * s.x_curr - 4.0 * s.x_prev + s.x_prev2) / (2.0 * dt);
}

}  // namespace bws
