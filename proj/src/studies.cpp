#include "bws/studies.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace bws {

using nlohmann::json;

namespace {

void parallel_runs(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

double fit_slope(const std::vector<double>& h, const std::vector<double>& err) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void norms(const std::vector<double>& a, const std::vector<double>& b, double dx, double& l2,
           double& linf) {
    double s = 0.0, m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
        m = std::max(m, std::abs(d));
    }
    l2 = std::sqrt(dx * s);
    linf = m;
}

struct File {
    std::FILE* f = nullptr;
    explicit File(const std::string& path) : f(std::fopen(path.c_str(), "w")) {
        if (!f) throw std::runtime_error("cannot open for writing: " + path);
    }
    ~File() {
        if (f) std::fclose(f);
    }
    File(const File&) = delete;
    File& operator=(const File&) = delete;
};

void dump_to(const std::string& path, const std::string& text) {
    File out(path);
    std::fwrite(text.data(), 1, text.size(), out.f);
    std::fputc('\n', out.f);
}

std::vector<double> default_spatial_ladder() { return {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}; }
std::vector<double> default_temporal_ladder() {
    return {0.01, 0.005, 0.0025, 0.00125, 0.000625, 0.0003125};
}

}  // namespace

ConvergenceStudy convergence_study(const ScenarioConfig& base, StudyAxis axis, StudyMode mode) {
    if (mode == StudyMode::exact_soliton && base.bottom_mode != BottomMode::flat)
        throw std::invalid_argument("convergence_study: exact mode requires a flat bottom");
    if (base.wave_kind != WaveKind::soliton)
        throw std::invalid_argument("convergence_study: configure a single soliton");

    ConvergenceStudy st;
    st.axis = axis;
    st.mode = mode;

    std::vector<double> ladder = axis == StudyAxis::space
                                     ? (base.spatial_ladder.empty() ? default_spatial_ladder()
                                                                    : base.spatial_ladder)
                                     : (base.temporal_ladder.empty() ? default_temporal_ladder()
                                                                     : base.temporal_ladder);
    std::sort(ladder.begin(), ladder.end(), std::greater<double>());

    const double fine_dx = axis == StudyAxis::space ? ladder.back() : base.dx;
    const double c = speed_for_amplitude(1.0, base.mu(), base.eps(), fine_dx / 10.0);
    const SolitonProfile profile = solve_profile(c, base.mu(), base.eps(), fine_dx / 10.0);

    auto make_cfg = [&](double dx, double dt) {
        ScenarioConfig cfg = base;
        cfg.dx = dx;
        cfg.dt = dt;
        cfg.snapshot_stride = 1 << 30;  // final frame only
        cfg.breaking_detector = false;
        cfg.override_cfl = true;  // guard is enforced for production runs, not ladders
        return cfg;
    };
    RunHooks hooks;
    hooks.profile = &profile;
    hooks.record_energy = false;

    const std::size_t n_runs = ladder.size() + (mode == StudyMode::self_relative &&
                                                axis == StudyAxis::time ? 1 : 0);
    std::vector<ScenarioResult> results(n_runs);
    parallel_runs(n_runs, [&](std::size_t i) {
        if (i < ladder.size()) {
            const double dx = axis == StudyAxis::space ? ladder[i] : base.dx;
            const double dt = axis == StudyAxis::time ? ladder[i] : base.dt;
            results[i] = run_scenario(make_cfg(dx, dt), hooks);
        } else {
            results[i] = run_scenario(make_cfg(base.dx, base.reference_dt), hooks);
        }
    });
    for (const auto& r : results)
        if (r.halt != HaltReason::none)
            throw std::runtime_error(std::string("convergence_study: ladder run halted: ") +
                                     halt_reason_name(r.halt));

    const double lead = base.solid_center_or_mid() - base.wave_offset;

    std::vector<double> hs, e2s, eis;
    auto add_rung = [&](double dx, double dt, double l2, double linf) {
        st.rungs.push_back({dx, dt, l2, linf});
        hs.push_back(axis == StudyAxis::space ? dx : dt);
        e2s.push_back(l2);
        eis.push_back(linf);
    };

    if (mode == StudyMode::exact_soliton) {
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            const ScenarioResult& r = results[i];
            std::vector<double> exact(r.final_zeta.size());
            const double shift = lead + c * r.final_time;
            for (std::size_t k = 0; k < exact.size(); ++k)
                exact[k] = profile.eval_zeta(r.dx * static_cast<double>(k) - shift);
            double l2 = 0, linf = 0;
            norms(r.final_zeta, exact, r.dx, l2, linf);
            add_rung(r.dx, r.dt, l2, linf);
        }
        st.reference_dx = 0.0;
        st.reference_dt = 0.0;
    } else if (axis == StudyAxis::space) {
        const ScenarioResult& ref = results[ladder.size() - 1];
        st.reference_dx = ref.dx;
        st.reference_dt = ref.dt;
        for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
            const ScenarioResult& r = results[i];
            const double ratio_d = r.dx / ref.dx;
            const long ratio = std::lround(ratio_d);
            if (std::abs(ratio_d - static_cast<double>(ratio)) > 1e-9)
                throw std::invalid_argument("convergence_study: ladder spacings must nest");
            std::vector<double> coarse_ref(r.final_zeta.size());
            for (std::size_t k = 0; k < coarse_ref.size(); ++k)
                coarse_ref[k] = ref.final_zeta[k * static_cast<std::size_t>(ratio)];
            double l2 = 0, linf = 0;
            norms(r.final_zeta, coarse_ref, r.dx, l2, linf);
            add_rung(r.dx, r.dt, l2, linf);
        }
    } else {
        const ScenarioResult& ref = results[ladder.size()];
        st.reference_dx = ref.dx;
        st.reference_dt = ref.dt;
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            const ScenarioResult& r = results[i];
            double l2 = 0, linf = 0;
            norms(r.final_zeta, ref.final_zeta, r.dx, l2, linf);
            add_rung(r.dx, r.dt, l2, linf);
        }
    }

    st.monotone = true;
    for (std::size_t i = 1; i < e2s.size(); ++i)
        if (!(e2s[i] < e2s[i - 1]) || !(eis[i] < eis[i - 1])) st.monotone = false;
    st.slope_l2 = fit_slope(hs, e2s);
    st.slope_linf = fit_slope(hs, eis);
    return st;
}

std::string ConvergenceStudy::to_json() const {
    json j;
    j["axis"] = axis == StudyAxis::space ? "space" : "time";
    j["mode"] = mode == StudyMode::exact_soliton ? "exact" : "relative";
    j["slope_l2"] = slope_l2;
    j["slope_linf"] = slope_linf;
    j["monotone"] = monotone;
    j["reference_dx"] = reference_dx;
    j["reference_dt"] = reference_dt;
    json rows = json::array();
    for (const auto& r : rungs)
        rows.push_back({{"dx", r.dx}, {"dt", r.dt}, {"err_l2", r.err_l2}, {"err_linf", r.err_linf}});
    j["rungs"] = rows;
    return j.dump(2);
}

void ConvergenceStudy::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    File out(dir + "/convergence.csv");
    std::fprintf(out.f, "dx,dt,err_l2,err_linf\n");
    for (const auto& r : rungs)
        std::fprintf(out.f, "%.17g,%.17g,%.17g,%.17g\n", r.dx, r.dt, r.err_l2, r.err_linf);
    dump_to(dir + "/convergence.json", to_json());
}

AmplitudeStudy amplitude_study(const ScenarioConfig& base) {
    std::vector<double> amplitudes = base.study_amplitudes_m;
    if (amplitudes.empty()) amplitudes = {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
    std::vector<double> frictions = base.study_frictions;
    if (frictions.empty()) frictions = {0.001, 0.01, 0.5};
    std::vector<std::string> modes = base.study_modes;
    if (modes.empty()) modes = {"flat", "fixed", "moving"};

    struct Task {
        double amplitude;
        std::string mode;
        double c_fric;
    };
    std::vector<Task> tasks;
    for (double a : amplitudes) {
        for (const std::string& m : modes) {
            if (m == "moving") {
                for (double f : frictions) tasks.push_back({a, m, f});
            } else {
                tasks.push_back({a, m, 0.0});
            }
        }
    }

    AmplitudeStudy st;
    st.entries.resize(tasks.size());
    parallel_runs(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        ScenarioConfig cfg = base;
        cfg.wave_amplitude_m = t.amplitude;
        cfg.wave_kind = WaveKind::soliton;
        cfg.breaking_detector = true;
        cfg.snapshot_stride = 1 << 30;
        if (t.mode == "flat") cfg.bottom_mode = BottomMode::flat;
        else if (t.mode == "fixed") cfg.bottom_mode = BottomMode::fixed_bottom;
        else cfg.bottom_mode = BottomMode::moving;
        if (t.mode == "moving") cfg.c_fric = t.c_fric;
        cfg.t_end = std::max(base.t_end, 2.0 * base.wave_offset + 6.0);
        RunHooks hooks;
        hooks.stop_after_amplitude = true;
        hooks.record_energy = false;
        const ScenarioResult r = run_scenario(cfg, hooks);
        AmplitudeEntry e;
        e.amplitude_m = t.amplitude;
        e.mode = t.mode;
        e.c_fric = t.mode == "moving" ? t.c_fric : 0.0;
        if (r.breaking) {
            e.broke = true;
            e.break_position = r.breaking->crest_position;
        } else if (r.amplitude_out) {
            e.ratio = r.amplitude_ratio();
        }
        st.entries[i] = e;
    });
    return st;
}

std::string AmplitudeStudy::to_json() const {
    json rows = json::array();
    for (const auto& e : entries)
        rows.push_back({{"amplitude_m", e.amplitude_m},
                        {"mode", e.mode},
                        {"c_fric", e.c_fric},
                        {"broke", e.broke},
                        {"ratio", e.ratio},
                        {"break_position", e.break_position}});
    json j;
    j["entries"] = rows;
    return j.dump(2);
}

void AmplitudeStudy::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    File out(dir + "/amplitude.csv");
    std::fprintf(out.f, "amplitude_m,mode,c_fric,broke,ratio,break_position\n");
    for (const auto& e : entries)
        std::fprintf(out.f, "%.17g,%s,%.17g,%d,%.17g,%.17g\n", e.amplitude_m, e.mode.c_str(),
                     e.c_fric, e.broke ? 1 : 0, e.ratio, e.break_position);
    dump_to(dir + "/amplitude.json", to_json());
}

BreakingStudy breaking_study(const ScenarioConfig& base) {
    std::vector<double> amplitudes = base.study_amplitudes_m;
    if (amplitudes.empty()) amplitudes = {6.0, 6.5, 7.0, 7.5, 8.0};
    std::vector<double> frictions = base.study_frictions;
    if (frictions.empty()) frictions = {0.001, 0.5};

    struct Task {
        double amplitude;
        std::string mode;
        double c_fric;
    };
    std::vector<Task> tasks;
    for (double a : amplitudes) {
        tasks.push_back({a, "fixed", 0.0});
        for (double f : frictions) tasks.push_back({a, "moving", f});
    }

    BreakingStudy st;
    st.entries.resize(tasks.size());
    parallel_runs(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        ScenarioConfig cfg = base;
        cfg.wave_amplitude_m = t.amplitude;
        cfg.wave_kind = WaveKind::soliton;
        cfg.breaking_detector = true;
        cfg.snapshot_stride = 1 << 30;
        cfg.bottom_mode = t.mode == "fixed" ? BottomMode::fixed_bottom : BottomMode::moving;
        if (t.mode == "moving") cfg.c_fric = t.c_fric;
        cfg.t_end = std::max(base.t_end, 2.0 * base.wave_offset + 6.0);
        RunHooks hooks;
        hooks.stop_after_amplitude = true;  // no breaking once the crest clears the station
        hooks.record_energy = false;
        const ScenarioResult r = run_scenario(cfg, hooks);
        BreakingEntry e;
        e.amplitude_m = t.amplitude;
        e.mode = t.mode;
        e.c_fric = t.mode == "moving" ? t.c_fric : 0.0;
        if (r.breaking) {
            e.fired = true;
            e.crest_position = r.breaking->crest_position;
            e.time = r.breaking->time;
        }
        st.entries[i] = e;
    });
    return st;
}

std::string BreakingStudy::to_json() const {
    json rows = json::array();
    for (const auto& e : entries)
        rows.push_back({{"amplitude_m", e.amplitude_m},
                        {"mode", e.mode},
                        {"c_fric", e.c_fric},
                        {"fired", e.fired},
                        {"crest_position", e.crest_position},
                        {"time", e.time}});
    json j;
    j["entries"] = rows;
    return j.dump(2);
}

void BreakingStudy::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    File out(dir + "/breaking.csv");
    std::fprintf(out.f, "amplitude_m,mode,c_fric,fired,crest_position,time\n");
    for (const auto& e : entries)
        std::fprintf(out.f, "%.17g,%s,%.17g,%d,%.17g,%.17g\n", e.amplitude_m, e.mode.c_str(),
                     e.c_fric, e.fired ? 1 : 0, e.crest_position, e.time);
    dump_to(dir + "/breaking.json", to_json());
}

namespace {

DisplacementRun pack_run(std::string tag, double c_fric, const ScenarioResult& r) {
    DisplacementRun run;
    run.tag = std::move(tag);
    run.c_fric = c_fric;
    run.max_abs_x = r.max_abs_x;
    run.final_x = r.final_x;
    run.t = r.traj_t;
    run.x = r.traj_x;
    run.v = r.traj_v;
    return run;
}

}  // namespace

DisplacementStudy displacement_study(const ScenarioConfig& base, DisplacementMode mode) {
    DisplacementStudy st;
    st.mode = mode;

    if (mode == DisplacementMode::sweep) {
        std::vector<double> frictions = base.study_frictions;
        if (frictions.empty()) frictions = {0.001, 0.0015, 0.002, 0.0025, 0.003};
        st.runs.resize(frictions.size());
        parallel_runs(frictions.size(), [&](std::size_t i) {
            ScenarioConfig cfg = base;
            cfg.c_fric = frictions[i];
            cfg.wave_kind = WaveKind::soliton;
            cfg.bottom_mode = BottomMode::moving;
            cfg.snapshot_stride = 1 << 30;
            RunHooks hooks;
            hooks.record_energy = false;
            char tag[64];
            std::snprintf(tag, sizeof tag, "fric_%g", frictions[i]);
            st.runs[i] = pack_run(tag, frictions[i], run_scenario(cfg, hooks));
        });
        return st;
    }

    if (mode == DisplacementMode::single) {
        ScenarioConfig cfg = base;
        cfg.wave_kind = WaveKind::soliton;
        cfg.bottom_mode = BottomMode::moving;
        RunHooks hooks;
        hooks.record_energy = false;
        st.runs.push_back(pack_run("single", cfg.c_fric, run_scenario(cfg, hooks)));
        return st;
    }

    if (mode == DisplacementMode::train) {
        ScenarioConfig cfg = base;
        cfg.wave_kind = WaveKind::wave_train;
        cfg.bottom_mode = BottomMode::moving;
        RunHooks hooks;
        hooks.record_energy = false;
        const ScenarioResult r = run_scenario(cfg, hooks);
        st.runs.push_back(pack_run("train", cfg.c_fric, r));
        // Sample the solid position once each wave has cleared the exit
        // station (plus half a spacing of settling time).
        const double station = cfg.solid_center_or_mid() + cfg.wave_offset;
        const double c = r.wave_speed;
        const double spacing = r.wave_centers.size() > 1
                                   ? r.wave_centers[0] - r.wave_centers[1]
                                   : 0.0;
        for (double center : r.wave_centers) {
            const double t_sample = (station - center) / c + 0.5 * spacing / c;
            const long idx = std::lround(t_sample / cfg.dt);
            if (idx >= 0 && idx < static_cast<long>(r.traj_t.size()))
                st.post_wave_x.push_back(r.traj_x[static_cast<std::size_t>(idx)]);
        }
        return st;
    }

    // Ablation: rerun with the pressure forcing removed from the moment of
    // peak solid velocity, keeping only the frictional deceleration.
    ScenarioConfig cfg = base;
    cfg.wave_kind = WaveKind::soliton;
    cfg.bottom_mode = BottomMode::moving;
    RunHooks hooks;
    hooks.record_energy = false;
    const ScenarioResult full = run_scenario(cfg, hooks);
    std::size_t peak = 0;
    for (std::size_t i = 1; i < full.traj_v.size(); ++i)
        if (full.traj_v[i] > full.traj_v[peak]) peak = i;
    st.ablation_time = full.traj_t[peak];

    RunHooks ablated_hooks = hooks;
    ablated_hooks.ablate_pressure_from = st.ablation_time;
    const ScenarioResult ablated = run_scenario(cfg, ablated_hooks);

    st.runs.push_back(pack_run("full", cfg.c_fric, full));
    st.runs.push_back(pack_run("ablated", cfg.c_fric, ablated));

    // Linear fit of the ablated velocity decay from the peak until the
    // solid (almost) stops.
    {
        const auto& t = ablated.traj_t;
        const auto& v = ablated.traj_v;
        const double v_peak = v[std::min(peak, v.size() - 1)];
        std::vector<double> ts, vs;
        for (std::size_t i = peak; i < t.size(); ++i) {
            if (v[i] < 0.02 * v_peak) break;
            ts.push_back(t[i]);
            vs.push_back(v[i]);
        }
        if (ts.size() >= 3) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            const double n = static_cast<double>(ts.size());
            for (std::size_t i = 0; i < ts.size(); ++i) {
                sx += ts[i];
                sy += vs[i];
                sxx += ts[i] * ts[i];
                sxy += ts[i] * vs[i];
            }
            const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            const double icept = (sy - slope * sx) / n;
            double rss = 0;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                const double d = vs[i] - (icept + slope * ts[i]);
                rss += d * d;
            }
            st.ablation_linear_residual = std::sqrt(rss / n) / std::max(1e-300, std::abs(v_peak));
        }
        bool reverses = false;
        for (std::size_t i = peak; i < full.traj_v.size(); ++i)
            if (full.traj_v[i] < 0.0) reverses = true;
        st.full_model_reverses = reverses;
    }
    return st;
}

std::string DisplacementStudy::to_json() const {
    json j;
    switch (mode) {
        case DisplacementMode::sweep: j["mode"] = "sweep"; break;
        case DisplacementMode::single: j["mode"] = "single"; break;
        case DisplacementMode::train: j["mode"] = "train"; break;
        case DisplacementMode::ablation: j["mode"] = "ablation"; break;
    }
    json rows = json::array();
    for (const auto& r : runs)
        rows.push_back({{"tag", r.tag},
                        {"c_fric", r.c_fric},
                        {"max_abs_x", r.max_abs_x},
                        {"final_x", r.final_x}});
    j["runs"] = rows;
    if (!post_wave_x.empty()) j["post_wave_x"] = post_wave_x;
    if (mode == DisplacementMode::ablation) {
        j["ablation_time"] = ablation_time;
        j["ablation_linear_residual"] = ablation_linear_residual;
        j["full_model_reverses"] = full_model_reverses;
    }
    return j.dump(2);
}

void DisplacementStudy::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    for (const auto& r : runs) {
        File out(dir + "/solid_" + r.tag + ".csv");
        std::fprintf(out.f, "time,x,xdot\n");
        for (std::size_t i = 0; i < r.t.size(); ++i)
            std::fprintf(out.f, "%.17g,%.17g,%.17g\n", r.t[i], r.x[i], r.v[i]);
    }
    dump_to(dir + "/displacement.json", to_json());
}

}  // namespace bws
