#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bws/grid.hpp"
#include "bws/physics.hpp"
#include "bws/solid.hpp"

namespace bws {

struct CflResult {
    double ratio = 0.0;
    bool pass = false;
};

/// Linear stability guard sqrt(g H0) dt / dx <= 0.5 (boundary inclusive).
CflResult cfl_check(double dt, double dx, double g_dim, double h0_dim);

enum class HaltReason : std::uint8_t {
    none = 0,
    non_physical_height,    // min fluid height at or below h_min (or not finite)
    solid_touched_boundary,  // translated support reached a tank wall
    contact_lost,            // normal-force bracket non-positive
    wave_breaking,           // slope criterion fired (when armed)
};
const char* halt_reason_name(HaltReason r);

enum class BottomMode : std::uint8_t { moving, fixed_bottom, flat };

struct StepperOptions {
    double dt = 1e-3;
    BottomMode mode = BottomMode::moving;
    int corrector_iterations = 1;
    double solid_v0 = 0.0;
    // Pressure forcing is dropped from this time on (damping ablation runs).
    double ablate_pressure_from = std::numeric_limits<double>::infinity();
};

/// Advances the coupled system: the first two steps integrate the fluid
/// with classic RK4 (the solid runs on its own centred update from a
/// consistent virtual history), after which the third-order
/// Adams-Bashforth predictor with fourth-order Adams-Moulton correction
/// takes over. One call to advance() moves one time level.
class Stepper {
public:
    Stepper(const StaggeredGrid& grid, const Bathymetry* bathy, const PhysicalParams& params,
            FluidState initial, const StepperOptions& opts);

    /// One step; false when the run halted (reason via halt()).
    /// with_diagnostics additionally evaluates the energy and mass of the
    /// level being left, available from level_energy()/level_mass().
    bool advance(bool with_diagnostics = false);

    HaltReason halt() const { return halt_; }
    long step_index() const { return n_; }
    double time() const { return static_cast<double>(n_) * opts_.dt; }

    const FluidState& state() const { return state_; }
    const StaggeredGrid& grid() const { return grid_; }
    const PhysicalParams& params() const { return params_; }
    const BottomFields& bottom() const { return bottom_; }

    double solid_x() const { return solid_.x_curr; }
    /// Second-order backward velocity at the current level (no look-ahead).
    double solid_v_backward() const;

    // Level-(n-1) record captured by the last advance() call.
    double level_time() const { return level_time_; }
    double level_x() const { return level_x_; }
    double level_v() const { return level_v_; }
    double level_energy() const { return level_energy_; }
    double level_mass() const { return level_mass_; }

    /// Energy/mass of the current state with the backward solid velocity
    /// (used for the final sample of a finished run).
    double energy_now() const;
    double mass_now() const;

    static constexpr std::array<double, 3> kAb3 = {23.0 / 12.0, -16.0 / 12.0, 5.0 / 12.0};
    static constexpr std::array<double, 4> kAm4 = {9.0 / 24.0, 19.0 / 24.0, -5.0 / 24.0,
                                                   1.0 / 24.0};

private:
    bool coupled() const { return bathy_ != nullptr && opts_.mode == BottomMode::moving; }
    bool eval_rhs(const std::vector<double>& zeta, const std::vector<double>& vbar,
                  const BottomFields& bottom, double x_dot, double x_ddot,
                  std::vector<double>& E, std::vector<double>& F);
    bool solid_update(double& x_next);
    void capture_level(bool with_diagnostics, double v_central);
    bool fluid_rk4(double x_next, double v_c, double a_c, const std::vector<double>& e_n,
                   const std::vector<double>& f_n);
    bool fluid_pc(double x_next, const std::vector<double>& e_n, const std::vector<double>& f_n);

    const StaggeredGrid& grid_;
    const Bathymetry* bathy_;
    PhysicalParams params_;
    StepperOptions opts_;

    FluidState state_;
    SolidState solid_;
    BottomFields bottom_;
    HelmholtzSolver helmholtz_;

    long n_ = 0;
    HaltReason halt_ = HaltReason::none;

    // RHS history ring, slot = level % 3.
    std::array<std::vector<double>, 3> e_hist_;
    std::array<std::vector<double>, 3> f_hist_;

    double level_time_ = 0.0, level_x_ = 0.0, level_v_ = 0.0;
    double level_energy_ = 0.0, level_mass_ = 0.0;

    // Scratch
    std::vector<double> h_nodes_, h_mids_, flux_mids_, dzeta_mids_, v2_mids_, dv2_mids_;
    std::vector<double> zeta_mids_;
    std::vector<double> zeta_p_, ubar_p_, vbar_p_, zeta_c_, ubar_c_, vbar_c_;
    std::vector<double> e_star_, f_star_;
    std::vector<double> k_zeta_[4], k_ubar_[4];
    std::vector<double> stage_zeta_, stage_ubar_, stage_vbar_;
    BottomFields bottom_half_, bottom_next_;
};

}  // namespace bws
