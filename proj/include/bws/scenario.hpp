#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bws/grid.hpp"
#include "bws/integrator.hpp"
#include "bws/physics.hpp"
#include "bws/soliton.hpp"

namespace bws {

enum class WaveKind { soliton, wave_train, rest };

/// A single experiment: dimensional scales (which only set mu/eps/beta,
/// the CFL ratio and the contact constant), tank geometry and step sizes
/// in solver units, solid and wave setup, and numerical switches.
struct ScenarioConfig {
    std::string name = "scenario";

    // Dimensional scales (metres, m/s^2).
    double h0_m = 20.0;
    double wavelength_m = 40.0;
    double wave_amplitude_m = 4.0;
    double solid_height_m = 6.0;
    double gravity_m_s2 = 9.81;
    double solid_support_width_m = 40.0;

    // Tank and discretization (solver units).
    double tank_length = 200.0;
    double dx = 0.05;
    double solid_center = 0.0;  // 0 = tank midpoint
    double dt = 0.001;
    double t_end = 1.0;

    // Solid contact.
    double c_fric = 0.001;
    double m_tilde = 2.0 / 3.0;
    double delta = 1e-10;
    double solid_v0 = 0.0;

    // Initial wave.
    WaveKind wave_kind = WaveKind::soliton;
    double wave_offset = 2.0;  // crest to solid centre, in wavelengths
    int train_count = 10;
    double train_spacing = 0.0;  // 0 = tail-overlap bound

    // Numerics.
    BottomMode bottom_mode = BottomMode::moving;
    int corrector_iterations = 1;
    int snapshot_stride = 0;  // 0 = automatic
    bool breaking_detector = false;
    bool override_cfl = false;
    double h_min = 1e-3;
    double truncation_tol = 1e-4;

    // Optional study inputs (used by the study drivers, ignored by `run`).
    std::vector<double> study_amplitudes_m;
    std::vector<double> study_frictions;
    std::vector<std::string> study_modes;
    std::vector<double> spatial_ladder;
    std::vector<double> temporal_ladder;
    double reference_dt = 1e-4;

    double mu() const { return (h0_m / wavelength_m) * (h0_m / wavelength_m); }
    double eps() const { return wave_amplitude_m / h0_m; }
    double beta() const { return solid_height_m / h0_m; }
    double solid_center_or_mid() const { return solid_center > 0.0 ? solid_center : 0.5 * tank_length; }
    /// Gaussian length scale so the truncated support matches the
    /// configured footprint (solver units).
    double shape_scale() const;

    std::string to_json() const;
    static ScenarioConfig from_json(const std::string& text);
    static ScenarioConfig from_file(const std::string& path);
};

struct Snapshot {
    double t = 0.0;
    std::vector<double> zeta;
    std::vector<double> vbar;
};

struct BreakingEvent {
    double time = 0.0;
    double position = 0.0;       // steepest-slope interface
    double crest_position = 0.0;  // refined crest location at detection
};

struct ScenarioResult {
    std::string config_echo;  // full effective configuration, JSON

    double mu = 0.0, eps = 0.0, beta = 0.0, c_solid = 0.0, cfl_ratio = 0.0;
    double wave_speed = 0.0;
    std::size_t n_nodes = 0;
    long n_steps = 0;
    double dx = 0.0, dt = 0.0;
    double support_left0 = 0.0, support_right0 = 0.0;

    std::vector<Snapshot> snapshots;
    std::vector<double> traj_t, traj_x, traj_v;
    std::vector<double> energy_t, energy_val, mass_val;

    HaltReason halt = HaltReason::none;
    double halt_time = 0.0;
    std::optional<BreakingEvent> breaking;

    double amplitude_in = 0.0;
    std::optional<double> amplitude_out;
    double amplitude_time = 0.0;
    double max_abs_x = 0.0;
    double final_x = 0.0;
    double final_time = 0.0;

    std::vector<double> final_zeta, final_vbar;
    std::vector<double> wave_centers;  // initial crest positions

    double amplitude_ratio() const {
        return (amplitude_out && amplitude_in > 0.0) ? *amplitude_out / amplitude_in : 0.0;
    }
};

/// Extra knobs for programmatic runs (study drivers); not part of the
/// JSON surface.
struct RunHooks {
    const SolitonProfile* profile = nullptr;  // reuse a solved profile
    bool stop_after_amplitude = false;
    bool record_energy = true;
    double ablate_pressure_from = std::numeric_limits<double>::infinity();
};

/// Slope-criterion breaking detector: fires where (zeta_{i+1}-zeta_i)/dx
/// exceeds one; returns the interface position of the steepest slope.
std::optional<double> detect_breaking(const std::vector<double>& zeta, double dx);

/// Runs one scenario to t_end or an earlier halt.
ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunHooks& hooks = {});

/// Refined crest location and height (parabolic fit around the argmax).
void crest_info(const std::vector<double>& zeta, const StaggeredGrid& grid, double& x_crest,
                double& height);

}  // namespace bws
