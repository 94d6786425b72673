#pragma once

#include <string>
#include <vector>

#include "bws/grid.hpp"
#include "bws/physics.hpp"

namespace bws {

/// Flat-bottom solitary wave of speed c > 1, tabulated from the crest
/// outward on a uniform fine mesh. The velocity profile solves
///   V'' = (3/(mu c)) V (c - 1/(c - eps V) - (eps/2) V)
/// and the elevation follows algebraically, zeta = V / (c - eps V).
/// The profile is even about the crest; the tail below the tabulated range
/// continues analytically as V_end exp(-rate (xi - xi_end)).
struct SolitonProfile {
    double speed = 0.0;   // c
    double mu = 0.0;
    double eps = 0.0;
    double dxi = 0.0;     // tabulation mesh
    double tail_rate = 0.0;  // sqrt of the linearization rate at V = 0
    double peak_v = 0.0;
    double peak_zeta = 0.0;
    double half_width = 0.0;  // |xi| where the profile falls below 1e-12 of peak
    std::vector<double> v_prof;     // index 0 = crest
    std::vector<double> zeta_prof;  // same indexing

    double table_end() const { return dxi * static_cast<double>(v_prof.size() - 1); }
    double eval_v(double xi) const;
    double eval_zeta(double xi) const;
};

/// Integrates the profile ODE by shooting along the unstable manifold from
/// the far field (V = eta, V' = rate*eta with eta = 1e-10 of a peak
/// estimate), marching with RK4 until the crest, then mirroring. Throws
/// std::runtime_error("no solitary wave at these parameters") when V runs
/// into c/eps or no crest appears within the search span.
SolitonProfile solve_profile(double c, double mu, double eps, double mesh,
                             double relation_tol = 1e-12);

/// Wave speed whose solitary profile peaks at the requested elevation,
/// found by bisection on peak_zeta(c) to 1e-8 in c.
double speed_for_amplitude(double target_peak_zeta, double mu, double eps, double mesh);

/// Samples the profile onto the grid (cubic interpolation of the fine
/// tabulation) centred at `center`, moving in +x for direction >= 0.
/// The Helmholtz image is formed so the state is consistent. Rejects
/// placements whose tails above 1e-12 of peak touch a wall.
FluidState place_soliton(const SolitonProfile& profile, double center,
                         const StaggeredGrid& grid, int direction = +1);

/// Superposes `count` copies spaced `spacing` apart, lead crest at
/// `lead_center`, all moving in +x. Spacing below the 1e-10 tail-overlap
/// bound is widened to it.
FluidState place_wave_train(const SolitonProfile& profile, double lead_center,
                            double spacing, int count, const StaggeredGrid& grid);

/// Minimum crest spacing keeping neighbouring tails below 1e-10 of peak
/// where they meet.
double min_train_spacing(const SolitonProfile& profile);

/// Writes "xi value" rows over the symmetric tabulated range.
void export_profile(const SolitonProfile& profile, const std::string& path, bool elevation);

}  // namespace bws
