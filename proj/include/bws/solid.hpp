#pragma once

#include <vector>

#include "bws/grid.hpp"
#include "bws/physics.hpp"

namespace bws {

/// Displacement history of the sliding solid. Velocities and the
/// acceleration are central differences over the stored triple and are
/// valid once the following displacement is known.
struct SolidState {
    double x_curr = 0.0;   // X^n
    double x_prev = 0.0;   // X^{n-1}
    double x_prev2 = 0.0;  // X^{n-2}
    double v_central = 0.0;
    double a_central = 0.0;
};

/// Contact constant
///   c_solid = (|supp b| / m_tilde) (10/H0 + 1) - (1/m_tilde) int_supp b dx.
/// The support width is the analytic truncation width; the profile
/// integral uses Simpson on the grid over the bracketing node range.
double compute_c_solid(const Bathymetry& bathy, const PhysicalParams& p,
                       const StaggeredGrid& grid);

/// Friction magnitude
///   C = (c_fric/sqrt(mu)) (1 + c_solid/beta + (eps/(m_tilde beta)) int_{supp+X} zeta dx).
/// Throws std::runtime_error when the bracket is non-positive (contact
/// lost; the model assumes permanent contact).
double coeff_C(const std::vector<double>& zeta, const std::vector<double>& zeta_mids,
               double shift, const Bathymetry& bathy, const PhysicalParams& p,
               const StaggeredGrid& grid);

/// Pressure forcing
///   Cbar = (eps/(m_tilde beta)) int zeta b'(x - X) dx
/// with the analytic slope of the translated profile, Simpson over the
/// translated support.
double coeff_Cbar(const std::vector<double>& zeta, const std::vector<double>& zeta_mids,
                  double shift, const Bathymetry& bathy, const PhysicalParams& p,
                  const StaggeredGrid& grid);

/// Explicit displacement update: solves the centred second difference with
/// the implicit regularized friction for X^{n+1},
///   X^{n+1} = [2 X^n - (1 - dt^2 K) X^{n-1} + dt^2 Cbar] / (1 + dt^2 K),
///   K = C / (|3X^n - 4X^{n-1} + X^{n-2}| + 2 dt delta).
double solid_step(const SolidState& s, double C, double Cbar, double dt, double delta);

/// Central velocity/acceleration at the current level plus the second-order
/// backward velocity used inside the friction denominator.
void solid_kinematics(const SolidState& s, double x_next, double dt,
                      double& v_central, double& a_central, double& v_backward);

}  // namespace bws
