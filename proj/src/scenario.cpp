#include "bws/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bws {

using nlohmann::json;

double ScenarioConfig::shape_scale() const {
    const double half_width = 0.5 * solid_support_width_m / wavelength_m;
    return half_width / std::sqrt(std::log(beta() / truncation_tol) / 10.0);
}

namespace {

WaveKind wave_kind_from(const std::string& s) {
    if (s == "soliton") return WaveKind::soliton;
    if (s == "train") return WaveKind::wave_train;
    if (s == "rest") return WaveKind::rest;
    throw std::invalid_argument("unknown wave_kind: " + s);
}

const char* wave_kind_name(WaveKind k) {
    switch (k) {
        case WaveKind::soliton: return "soliton";
        case WaveKind::wave_train: return "train";
        case WaveKind::rest: return "rest";
    }
    return "soliton";
}

BottomMode bottom_mode_from(const std::string& s) {
    if (s == "moving") return BottomMode::moving;
    if (s == "fixed") return BottomMode::fixed_bottom;
    if (s == "flat") return BottomMode::flat;
    throw std::invalid_argument("unknown bottom_mode: " + s);
}

const char* bottom_mode_name(BottomMode m) {
    switch (m) {
        case BottomMode::moving: return "moving";
        case BottomMode::fixed_bottom: return "fixed";
        case BottomMode::flat: return "flat";
    }
    return "moving";
}

}  // namespace

std::string ScenarioConfig::to_json() const {
    json j;
    j["name"] = name;
    j["h0_m"] = h0_m;
    j["wavelength_m"] = wavelength_m;
    j["wave_amplitude_m"] = wave_amplitude_m;
    j["solid_height_m"] = solid_height_m;
    j["gravity_m_s2"] = gravity_m_s2;
    j["solid_support_width_m"] = solid_support_width_m;
    j["tank_length"] = tank_length;
    j["dx"] = dx;
    j["solid_center"] = solid_center;
    j["dt"] = dt;
    j["t_end"] = t_end;
    j["c_fric"] = c_fric;
    j["m_tilde"] = m_tilde;
    j["delta"] = delta;
    j["solid_v0"] = solid_v0;
    j["wave_kind"] = wave_kind_name(wave_kind);
    j["wave_offset"] = wave_offset;
    j["train_count"] = train_count;
    j["train_spacing"] = train_spacing;
    j["bottom_mode"] = bottom_mode_name(bottom_mode);
    j["corrector_iterations"] = corrector_iterations;
    j["snapshot_stride"] = snapshot_stride;
    j["breaking_detector"] = breaking_detector;
    j["override_cfl"] = override_cfl;
    j["h_min"] = h_min;
    j["truncation_tol"] = truncation_tol;
    if (!study_amplitudes_m.empty()) j["study"]["amplitudes_m"] = study_amplitudes_m;
    if (!study_frictions.empty()) j["study"]["frictions"] = study_frictions;
    if (!study_modes.empty()) j["study"]["modes"] = study_modes;
    if (!spatial_ladder.empty()) j["study"]["spatial_ladder"] = spatial_ladder;
    if (!temporal_ladder.empty()) j["study"]["temporal_ladder"] = temporal_ladder;
    j["study"]["reference_dt"] = reference_dt;
    return j.dump(2);
}

ScenarioConfig ScenarioConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    ScenarioConfig c;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("name", c.name);
    get("h0_m", c.h0_m);
    get("wavelength_m", c.wavelength_m);
    get("wave_amplitude_m", c.wave_amplitude_m);
    get("solid_height_m", c.solid_height_m);
    get("gravity_m_s2", c.gravity_m_s2);
    get("solid_support_width_m", c.solid_support_width_m);
    get("tank_length", c.tank_length);
    get("dx", c.dx);
    get("solid_center", c.solid_center);
    get("dt", c.dt);
    get("t_end", c.t_end);
    get("c_fric", c.c_fric);
    get("m_tilde", c.m_tilde);
    get("delta", c.delta);
    get("solid_v0", c.solid_v0);
    if (j.contains("wave_kind")) c.wave_kind = wave_kind_from(j.at("wave_kind").get<std::string>());
    get("wave_offset", c.wave_offset);
    get("train_count", c.train_count);
    get("train_spacing", c.train_spacing);
    if (j.contains("bottom_mode"))
        c.bottom_mode = bottom_mode_from(j.at("bottom_mode").get<std::string>());
    get("corrector_iterations", c.corrector_iterations);
    get("snapshot_stride", c.snapshot_stride);
    get("breaking_detector", c.breaking_detector);
    get("override_cfl", c.override_cfl);
    get("h_min", c.h_min);
    get("truncation_tol", c.truncation_tol);
    if (j.contains("study")) {
        const json& s = j.at("study");
        if (s.contains("amplitudes_m")) c.study_amplitudes_m = s.at("amplitudes_m").get<std::vector<double>>();
        if (s.contains("frictions")) c.study_frictions = s.at("frictions").get<std::vector<double>>();
        if (s.contains("modes")) c.study_modes = s.at("modes").get<std::vector<std::string>>();
        if (s.contains("spatial_ladder")) c.spatial_ladder = s.at("spatial_ladder").get<std::vector<double>>();
        if (s.contains("temporal_ladder")) c.temporal_ladder = s.at("temporal_ladder").get<std::vector<double>>();
        if (s.contains("reference_dt")) c.reference_dt = s.at("reference_dt").get<double>();
    }

    if (!(c.h0_m > 0) || !(c.wavelength_m > 0) || !(c.gravity_m_s2 > 0))
        throw std::invalid_argument("config: dimensional scales must be positive");
    if (!(c.mu() > 0) || c.mu() > 1.0)
        throw std::invalid_argument("config: shallowness mu must lie in (0, 1]");
    if (!(c.eps() > 0) || c.eps() > 1.0)
        throw std::invalid_argument("config: nonlinearity eps must lie in (0, 1]");
    if (c.bottom_mode != BottomMode::flat && (!(c.beta() > 0) || c.beta() > 1.0))
        throw std::invalid_argument("config: bottom parameter beta must lie in (0, 1]");
    if (!(c.dt > 0) || !(c.t_end >= 0) || !(c.dx > 0) || !(c.tank_length > 0))
        throw std::invalid_argument("config: tank and step sizes must be positive");
    if (!(c.m_tilde > 0) || !(c.delta > 0) || c.c_fric < 0)
        throw std::invalid_argument("config: solid parameters out of range");
    return c;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::optional<double> detect_breaking(const std::vector<double>& zeta, double dx) {
    double best = 1.0;
    std::ptrdiff_t at = -1;
    for (std::size_t i = 0; i + 1 < zeta.size(); ++i) {
        const double slope = (zeta[i + 1] - zeta[i]) / dx;
        if (slope > best) {
            best = slope;
            at = static_cast<std::ptrdiff_t>(i);
        }
    }
    if (at < 0) return std::nullopt;
    return (static_cast<double>(at) + 0.5) * dx;
}

void crest_info(const std::vector<double>& zeta, const StaggeredGrid& grid, double& x_crest,
                double& height) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < zeta.size(); ++i)
        if (zeta[i] > zeta[best]) best = i;
    x_crest = grid.node(best);
    height = zeta[best];
    if (best > 0 && best + 1 < zeta.size()) {
        const double a = zeta[best - 1], b = zeta[best], c = zeta[best + 1];
        const double denom = a - 2.0 * b + c;
        if (denom < -1e-300) {
            const double shift = 0.5 * (a - c) / denom;
            if (std::abs(shift) <= 0.5) {
                x_crest += shift * grid.dx;
                height = b - 0.25 * (a - c) * shift;
            }
        }
    }
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunHooks& hooks) {
    ScenarioResult res;
    res.config_echo = cfg.to_json();
    res.mu = cfg.mu();
    res.eps = cfg.eps();
    res.beta = cfg.beta();
    res.dx = cfg.dx;
    res.dt = cfg.dt;

    const StaggeredGrid grid = build_grid(cfg.tank_length, cfg.dx);
    res.n_nodes = grid.n_nodes;

    const double solid_center = cfg.solid_center_or_mid();
    std::optional<Bathymetry> bathy;
    if (cfg.bottom_mode != BottomMode::flat) {
        bathy = gaussian_bottom(cfg.beta(), cfg.shape_scale(), solid_center, cfg.truncation_tol);
        res.support_left0 = bathy->support_left();
        res.support_right0 = bathy->support_right();
    }

    PhysicalParams params;
    params.mu = cfg.mu();
    params.eps = cfg.eps();
    params.beta = cfg.beta();
    params.c_fric = cfg.c_fric;
    params.m_tilde = cfg.m_tilde;
    params.delta = cfg.delta;
    params.h0_dim = cfg.h0_m;
    params.g_dim = cfg.gravity_m_s2;
    params.h_min = cfg.h_min;
    params.c_solid = bathy ? compute_c_solid(*bathy, params, grid) : 0.0;
    res.c_solid = params.c_solid;

    const CflResult cfl = cfl_check(cfg.dt, cfg.dx, cfg.gravity_m_s2, cfg.h0_m);
    res.cfl_ratio = cfl.ratio;
    if (!cfl.pass && !cfg.override_cfl)
        throw std::invalid_argument("CFL ratio " + std::to_string(cfl.ratio) +
                                    " exceeds 0.5; pass override_cfl to run anyway");

    // Initial data.
    FluidState init;
    SolitonProfile local_profile;
    const SolitonProfile* profile = hooks.profile;
    if (cfg.wave_kind != WaveKind::rest) {
        if (!profile) {
            const double c = speed_for_amplitude(1.0, cfg.mu(), cfg.eps(), cfg.dx / 10.0);
            local_profile = solve_profile(c, cfg.mu(), cfg.eps(), cfg.dx / 10.0);
            profile = &local_profile;
        }
        res.wave_speed = profile->speed;
        const double lead = solid_center - cfg.wave_offset;
        if (cfg.wave_kind == WaveKind::soliton) {
            init = place_soliton(*profile, lead, grid);
            res.wave_centers = {lead};
        } else {
            double spacing = cfg.train_spacing > 0 ? cfg.train_spacing : min_train_spacing(*profile);
            spacing = std::max(spacing, min_train_spacing(*profile));
            init = place_wave_train(*profile, lead, spacing, cfg.train_count, grid);
            res.wave_centers.resize(cfg.train_count);
            for (int w = 0; w < cfg.train_count; ++w)
                res.wave_centers[w] = lead - spacing * w;
        }
    } else {
        init.zeta.assign(grid.n_nodes, 0.0);
        init.vbar.assign(grid.n_mids(), 0.0);
        init.ubar.assign(grid.n_mids(), 0.0);
    }

    StepperOptions opts;
    opts.dt = cfg.dt;
    opts.mode = cfg.bottom_mode;
    opts.corrector_iterations = cfg.corrector_iterations;
    opts.solid_v0 = cfg.solid_v0;
    opts.ablate_pressure_from = hooks.ablate_pressure_from;

    Stepper stepper(grid, bathy ? &*bathy : nullptr, params, std::move(init), opts);

    const long n_steps = std::lround(cfg.t_end / cfg.dt);
    res.n_steps = n_steps;
    long stride = cfg.snapshot_stride > 0 ? cfg.snapshot_stride
                                          : std::max(1L, n_steps / 60);

    // Amplitude bookkeeping (single-wave runs).
    double crest_x = 0.0, crest_h = 0.0;
    crest_info(stepper.state().zeta, grid, crest_x, crest_h);
    res.amplitude_in = cfg.wave_kind == WaveKind::soliton ? crest_h : 0.0;
    const double station = solid_center + cfg.wave_offset;

    auto push_snapshot = [&](double t) {
        Snapshot s;
        s.t = t;
        s.zeta = stepper.state().zeta;
        s.vbar = stepper.state().vbar;
        res.snapshots.push_back(std::move(s));
    };
    push_snapshot(0.0);

    bool done = false;
    for (long n = 0; n < n_steps && !done; ++n) {
        const bool diag = hooks.record_energy && (n % stride == 0);
        if (!stepper.advance(diag)) {
            res.halt = stepper.halt();
            res.halt_time = stepper.time();
            break;
        }
        // Level-n record written during the step.
        res.traj_t.push_back(stepper.level_time());
        res.traj_x.push_back(stepper.level_x());
        res.traj_v.push_back(stepper.level_v());
        res.max_abs_x = std::max(res.max_abs_x, std::abs(stepper.level_x()));
        if (diag) {
            res.energy_t.push_back(stepper.level_time());
            res.energy_val.push_back(stepper.level_energy());
            res.mass_val.push_back(stepper.level_mass());
        }

        const double t_now = stepper.time();
        if (stepper.step_index() % stride == 0) push_snapshot(t_now);

        crest_info(stepper.state().zeta, grid, crest_x, crest_h);
        if (cfg.breaking_detector && !res.breaking) {
            if (auto pos = detect_breaking(stepper.state().zeta, grid.dx)) {
                BreakingEvent ev;
                ev.time = t_now;
                ev.position = *pos;
                ev.crest_position = crest_x;
                res.breaking = ev;
                res.halt = HaltReason::wave_breaking;
                res.halt_time = t_now;
                done = true;
            }
        }
        if (cfg.wave_kind == WaveKind::soliton && !res.amplitude_out && crest_x >= station) {
            res.amplitude_out = crest_h;
            res.amplitude_time = t_now;
            if (hooks.stop_after_amplitude) done = true;
        }
    }

    // Final level.
    res.final_time = stepper.time();
    res.final_x = stepper.solid_x();
    res.max_abs_x = std::max(res.max_abs_x, std::abs(res.final_x));
    res.traj_t.push_back(stepper.time());
    res.traj_x.push_back(stepper.solid_x());
    res.traj_v.push_back(stepper.solid_v_backward());
    if (hooks.record_energy) {
        res.energy_t.push_back(stepper.time());
        res.energy_val.push_back(stepper.energy_now());
        res.mass_val.push_back(stepper.mass_now());
    }
    if (res.snapshots.empty() || res.snapshots.back().t != stepper.time()) push_snapshot(stepper.time());
    res.final_zeta = stepper.state().zeta;
    res.final_vbar = stepper.state().vbar;
    return res;
}

}  // namespace bws
