#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bws/scenario.hpp"

namespace bws {

enum class StudyAxis { space, time };
enum class StudyMode { exact_soliton, self_relative };

struct ConvergenceRung {
    double dx = 0.0, dt = 0.0;
    double err_l2 = 0.0, err_linf = 0.0;
};

struct ConvergenceStudy {
    StudyAxis axis = StudyAxis::space;
    StudyMode mode = StudyMode::exact_soliton;
    std::vector<ConvergenceRung> rungs;
    double slope_l2 = 0.0, slope_linf = 0.0;
    bool monotone = false;  // errors strictly decrease along the ladder
    double reference_dx = 0.0, reference_dt = 0.0;

    std::string to_json() const;
    void write(const std::string& dir) const;  // convergence.csv + convergence.json
};

/// Refinement ladder on one axis. Exact mode compares the final elevation
/// against the translated solitary-wave profile and requires a flat
/// bottom; self-relative mode compares against the finest-ladder run
/// (space) or a reference_dt run on the same grid (time). Ladder runs go
/// through the CFL guard with override (the coarse temporal rungs sit
/// above the guard by construction).
ConvergenceStudy convergence_study(const ScenarioConfig& base, StudyAxis axis, StudyMode mode);

struct AmplitudeEntry {
    double amplitude_m = 0.0;
    std::string mode;  // flat | fixed | moving
    double c_fric = 0.0;
    bool broke = false;
    double ratio = 0.0;          // amplitude out / amplitude in (when not broken)
    double break_position = 0.0;  // crest at detection (when broken)
};

struct AmplitudeStudy {
    std::vector<AmplitudeEntry> entries;
    std::string to_json() const;
    void write(const std::string& dir) const;  // amplitude.csv + amplitude.json
};

/// Amplitude in/out ratios per (wave amplitude, bottom mode, friction),
/// with a flat-bottom control per amplitude. Runs stop once the crest
/// clears the exit station; the breaking detector stays armed.
AmplitudeStudy amplitude_study(const ScenarioConfig& base);

struct BreakingEntry {
    double amplitude_m = 0.0;
    std::string mode;  // fixed | moving
    double c_fric = 0.0;
    bool fired = false;
    double crest_position = 0.0;
    double time = 0.0;
};

struct BreakingStudy {
    std::vector<BreakingEntry> entries;
    std::string to_json() const;
    void write(const std::string& dir) const;
};

/// Wave-breaking positions (crest location at detection) per amplitude
/// for the fixed bottom and the configured frictions.
BreakingStudy breaking_study(const ScenarioConfig& base);

enum class DisplacementMode { sweep, single, train, ablation };

struct DisplacementRun {
    std::string tag;
    double c_fric = 0.0;
    double max_abs_x = 0.0;
    double final_x = 0.0;
    std::vector<double> t, x, v;
};

struct DisplacementStudy {
    DisplacementMode mode = DisplacementMode::single;
    std::vector<DisplacementRun> runs;
    // train mode: solid position sampled after each wave has cleared the solid
    std::vector<double> post_wave_x;
    // ablation mode: diagnostics of the friction-only velocity decay
    double ablation_time = 0.0;
    double ablation_linear_residual = 0.0;  // rms residual of a linear fit, relative
    bool full_model_reverses = false;

    std::string to_json() const;
    void write(const std::string& dir) const;  // solid_<tag>.csv + displacement.json
};

/// Solid-trajectory experiments: friction sweep, single-wave pass,
/// wave-train accumulation, and the hydrodynamic-damping ablation (the
/// pressure forcing is removed the moment the solid velocity peaks).
DisplacementStudy displacement_study(const ScenarioConfig& base, DisplacementMode mode);

}  // namespace bws
