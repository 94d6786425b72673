#include "bws/output.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "json.hpp"

namespace bws {

using nlohmann::json;

namespace {

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

}  // namespace

std::string summary_json(const ScenarioResult& r) {
    json j;
    j["config"] = json::parse(r.config_echo);
    json& d = j["derived"];
    d["mu"] = r.mu;
    d["eps"] = r.eps;
    d["beta"] = r.beta;
    d["c_solid"] = r.c_solid;
    d["cfl_ratio"] = r.cfl_ratio;
    d["wave_speed"] = r.wave_speed;
    d["n_nodes"] = r.n_nodes;
    d["n_steps"] = r.n_steps;
    d["dx"] = r.dx;
    d["dt"] = r.dt;
    d["support_left"] = r.support_left0;
    d["support_right"] = r.support_right0;
    d["wave_centers"] = r.wave_centers;
    json& g = j["diagnostics"];
    g["halt_reason"] = halt_reason_name(r.halt);
    g["halt_time"] = r.halt_time;
    g["breaking_fired"] = r.breaking.has_value();
    if (r.breaking) {
        g["breaking_time"] = r.breaking->time;
        g["breaking_position"] = r.breaking->position;
        g["breaking_crest_position"] = r.breaking->crest_position;
    }
    g["amplitude_in"] = r.amplitude_in;
    if (r.amplitude_out) {
        g["amplitude_out"] = *r.amplitude_out;
        g["amplitude_ratio"] = r.amplitude_ratio();
        g["amplitude_time"] = r.amplitude_time;
    }
    g["max_abs_x"] = r.max_abs_x;
    g["final_x"] = r.final_x;
    g["final_time"] = r.final_time;
    return j.dump(2);
}

void write_outputs(const ScenarioResult& r, const std::string& dir) {
    std::filesystem::create_directories(dir);

    {
        File out(dir + "/snapshots.csv");
        std::fprintf(out.f, "time,x,zeta\n");
        const std::size_t n = r.n_nodes;
        for (const Snapshot& s : r.snapshots) {
            for (std::size_t i = 0; i < s.zeta.size(); ++i)
                std::fprintf(out.f, "%.17g,%.17g,%.17g\n", s.t, r.dx * static_cast<double>(i),
                             s.zeta[i]);
        }
        (void)n;
    }
    {
        File out(dir + "/solid.csv");
        std::fprintf(out.f, "time,x,xdot\n");
        for (std::size_t i = 0; i < r.traj_t.size(); ++i)
            std::fprintf(out.f, "%.17g,%.17g,%.17g\n", r.traj_t[i], r.traj_x[i], r.traj_v[i]);
    }
    {
        File out(dir + "/energy.csv");
        std::fprintf(out.f, "time,e_b,mass\n");
        for (std::size_t i = 0; i < r.energy_t.size(); ++i)
            std::fprintf(out.f, "%.17g,%.17g,%.17g\n", r.energy_t[i], r.energy_val[i],
                         r.mass_val[i]);
    }
    {
        File out(dir + "/summary.json");
        const std::string s = summary_json(r);
        std::fwrite(s.data(), 1, s.size(), out.f);
        std::fputc('\n', out.f);
    }
}

}  // namespace bws
