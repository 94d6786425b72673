// Command line driver for the wave tank simulator. All functionality is
// reached through the shared-library C API (bws.h).

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "bws.h"

namespace {

struct ConfigHandle {
    bws_config* cfg = nullptr;
    ~ConfigHandle() { bws_config_free(cfg); }
};

int fail(const char* what, bws_status rc) {
    std::fprintf(stderr, "error: %s (%s, status %d)\n", what, bws_last_error(), rc);
    return 1;
}

int load_config(const std::string& path, bool override_cfl, int snapshot_stride,
                ConfigHandle& handle) {
    bws_status rc = bws_config_from_file(path.c_str(), &handle.cfg);
    if (rc != BWS_OK) return fail("loading configuration failed", rc);
    if (override_cfl) bws_config_set_override_cfl(handle.cfg, 1);
    if (snapshot_stride > 0) bws_config_set_snapshot_stride(handle.cfg, snapshot_stride);
    return 0;
}

int print_and_free(char* json) {
    if (json) {
        std::printf("%s\n", json);
        bws_string_free(json);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bws: one-dimensional dispersive wave tank with a bottom-sliding solid"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    bool override_cfl = false;
    int snapshot_stride = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "scenario configuration (JSON)")->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_flag("--override-cfl", override_cfl, "run even when the CFL guard fails");
        cmd->add_option("--snapshot-stride", snapshot_stride, "steps between stored snapshots");
    };

    CLI::App* cmd_run = app.add_subcommand("run", "run a single scenario");
    add_common(cmd_run);

    std::string axis = "space", conv_mode = "exact";
    CLI::App* cmd_conv = app.add_subcommand("converge", "refinement-ladder convergence study");
    add_common(cmd_conv);
    cmd_conv->add_option("--axis", axis, "space | time")->check(CLI::IsMember({"space", "time"}));
    cmd_conv->add_option("--mode", conv_mode, "exact | relative")
        ->check(CLI::IsMember({"exact", "relative"}));

    CLI::App* cmd_ampl = app.add_subcommand("amplitude", "amplitude in/out ratio study");
    add_common(cmd_ampl);

    CLI::App* cmd_break = app.add_subcommand("breaking", "wave-breaking position study");
    add_common(cmd_break);

    std::string disp_mode = "single";
    CLI::App* cmd_disp = app.add_subcommand("displacement", "solid trajectory study");
    add_common(cmd_disp);
    cmd_disp->add_option("--mode", disp_mode, "sweep | single | train | ablation")
        ->check(CLI::IsMember({"sweep", "single", "train", "ablation"}));

    CLI11_PARSE(app, argc, argv);

    ConfigHandle cfg;
    if (int rc = load_config(config_path, override_cfl, snapshot_stride, cfg)) return rc;

    if (app.got_subcommand(cmd_run)) {
        bws_result* result = nullptr;
        bws_status rc = bws_run_scenario(cfg.cfg, &result);
        if (rc != BWS_OK) return fail("run failed", rc);
        rc = bws_result_write_outputs(result, out_dir.c_str());
        if (rc != BWS_OK) {
            bws_result_free(result);
            return fail("writing outputs failed", rc);
        }
        char* summary = nullptr;
        bws_result_summary_json(result, &summary);
        print_and_free(summary);
        std::fprintf(stderr, "halt: %s; outputs in %s\n", bws_result_halt_reason(result),
                     out_dir.c_str());
        bws_result_free(result);
        return 0;
    }

    char* json = nullptr;
    bws_status rc = BWS_OK;
    if (app.got_subcommand(cmd_conv))
        rc = bws_run_convergence(cfg.cfg, axis.c_str(), conv_mode.c_str(), out_dir.c_str(), &json);
    else if (app.got_subcommand(cmd_ampl))
        rc = bws_run_amplitude_study(cfg.cfg, out_dir.c_str(), &json);
    else if (app.got_subcommand(cmd_break))
        rc = bws_run_breaking_study(cfg.cfg, out_dir.c_str(), &json);
    else if (app.got_subcommand(cmd_disp))
        rc = bws_run_displacement_study(cfg.cfg, disp_mode.c_str(), out_dir.c_str(), &json);
    if (rc != BWS_OK) return fail("study failed", rc);
    return print_and_free(json);
}
