#pragma once

#include <cstddef>
#include <vector>

#include "bws/grid.hpp"
#include "bws/stencils.hpp"

namespace bws {

/// Nondimensional parameter set plus the dimensional scales the harness
/// keeps around for reporting and the contact-force constant.
struct PhysicalParams {
    double mu = 0.1;        // shallowness (depth/wavelength)^2
    double eps = 0.1;       // nonlinearity, amplitude over depth
    double beta = 0.3;      // solid height over depth
    double c_fric = 0.001;  // friction coefficient
    double m_tilde = 2.0 / 3.0;
    double delta = 1e-10;   // friction regularization
    double h0_dim = 20.0;   // base depth in metres
    double g_dim = 9.81;    // gravity in m/s^2
    double c_solid = 0.0;   // contact constant, see compute_c_solid
    double h_min = 1e-3;    // validity floor for the fluid height

    double atmospheric_factor() const { return 10.0 / h0_dim + 1.0; }
};

/// Fluid unknowns: elevation on nodes, averaged velocity and its
/// Helmholtz image on midpoints. ubar = vbar - (mu/3) vbar_xx.
struct FluidState {
    std::vector<double> zeta;
    std::vector<double> vbar;
    std::vector<double> ubar;
};

/// h = 1 + eps*zeta - b with b the sampled bottom elevation (peak beta).
/// min_h receives the smallest height; callers halt when it is not
/// strictly above params.h_min (or is not finite).
void fluid_height(const std::vector<double>& zeta, const std::vector<double>& b_nodes,
                  double eps, std::vector<double>& h, double& min_h);

/// ubar = vbar - (mu/3) d2 vbar on the midpoint family (odd wall reflection).
void helmholtz_apply(const std::vector<double>& vbar, double mu, double dx,
                     std::vector<double>& ubar);
std::vector<double> helmholtz_apply(const std::vector<double>& vbar, double mu, double dx);

/// Direct pentadiagonal solver for the Helmholtz map above. The matrix is
/// symmetric positive definite for mu >= 0 with the odd-reflection closure;
/// a banded Cholesky factorization is built once and reused. One iterative
/// refinement pass keeps the round-trip residual near machine precision.
class HelmholtzSolver {
public:
    HelmholtzSolver() = default;
    HelmholtzSolver(std::size_t n_mids, double mu, double dx);

    void solve(const std::vector<double>& ubar, std::vector<double>& vbar) const;
    std::vector<double> solve(const std::vector<double>& ubar) const;

    double mu() const { return mu_; }

private:
    void factorize();
    void back_substitute(std::vector<double>& x) const;

    std::size_t n_ = 0;
    double mu_ = 0.0;
    double dx_ = 0.0;
    // Lower-band Cholesky factors: diag and two subdiagonals.
    std::vector<double> d_, e1_, e2_;
    mutable std::vector<double> work_, resid_;
};

/// Right-hand side of the elevation equation,
///   E = -d/dx(h vbar) - (1/eps) b'(x - X) Xdot        (on nodes).
/// The flux h*vbar is formed on midpoints with interpolated h, then
/// differentiated back to the nodes.
void rhs_zeta(const std::vector<double>& zeta, const std::vector<double>& vbar,
              const BottomFields& bottom, double x_dot, const PhysicalParams& p, double dx,
              std::vector<double>& E, double& min_h,
              std::vector<double>& h_nodes, std::vector<double>& h_mids,
              std::vector<double>& flux_mids);

/// Right-hand side of the momentum equation,
///   F = -d/dx zeta - (eps/2) d/dx(vbar^2)
///       - (mu/(2 eps)) b'''(x - X) Xdot^2 + (mu/(2 eps)) b''(x - X) Xddot   (on midpoints).
void rhs_momentum(const std::vector<double>& zeta, const std::vector<double>& vbar,
                  const BottomFields& bottom, double x_dot, double x_ddot,
                  const PhysicalParams& p, double dx, std::vector<double>& F,
                  std::vector<double>& dzeta_mids, std::vector<double>& v2_mids,
                  std::vector<double>& dv2_mids);

/// Wave-structure energy
///   E_B = 1/2 int zeta^2 + 1/2 int h vbar^2 + 1/2 int (mu/3) h (vbar_x)^2
///         + 1/(2 eps) Xdot^2,
/// all integrals by Simpson over the whole tank.
double energy(const FluidState& state, const std::vector<double>& b_nodes, double x_dot,
              const PhysicalParams& p, const StaggeredGrid& grid);

/// Simpson integral of the elevation over the tank (diagnostic).
double mass(const std::vector<double>& zeta, const StaggeredGrid& grid);

}  // namespace bws
