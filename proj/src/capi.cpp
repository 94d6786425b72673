#include "bws.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "bws/output.hpp"
#include "bws/scenario.hpp"
#include "bws/studies.hpp"

struct bws_config {
    bws::ScenarioConfig cfg;
};

struct bws_result {
    bws::ScenarioResult res;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool is_cfl_message(const char* what) {
    return what && std::strstr(what, "CFL") != nullptr;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
bws_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        if (is_cfl_message(e.what())) return BWS_ERR_CFL;
        if (std::strstr(e.what(), "parse") != nullptr) return BWS_ERR_PARSE;
        return BWS_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc& e) {
        set_error(e.what());
        return BWS_ERR_INTERNAL;
    } catch (const std::runtime_error& e) {
        set_error(e.what());
        if (std::strstr(e.what(), "cannot open") != nullptr ||
            std::strstr(e.what(), "writing") != nullptr)
            return BWS_ERR_IO;
        return BWS_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BWS_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* bws_version(void) { return "1.0.0"; }

const char* bws_last_error(void) { return g_last_error.c_str(); }

void bws_string_free(char* s) { std::free(s); }

bws_status bws_config_from_json(const char* json_text, bws_config** out) {
    if (!json_text || !out) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto cfg = std::make_unique<bws_config>();
        cfg->cfg = bws::ScenarioConfig::from_json(json_text);
        *out = cfg.release();
        return BWS_OK;
    });
}

bws_status bws_config_from_file(const char* path, bws_config** out) {
    if (!path || !out) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto cfg = std::make_unique<bws_config>();
        cfg->cfg = bws::ScenarioConfig::from_file(path);
        *out = cfg.release();
        return BWS_OK;
    });
}

void bws_config_free(bws_config* cfg) { delete cfg; }

bws_status bws_config_to_json(const bws_config* cfg, char** out_json) {
    if (!cfg || !out_json) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out_json = dup_string(cfg->cfg.to_json());
        return *out_json ? BWS_OK : BWS_ERR_INTERNAL;
    });
}

bws_status bws_config_set_override_cfl(bws_config* cfg, int enabled) {
    if (!cfg) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    cfg->cfg.override_cfl = enabled != 0;
    return BWS_OK;
}

bws_status bws_config_set_snapshot_stride(bws_config* cfg, int stride) {
    if (!cfg || stride < 0) {
        set_error("stride must be non-negative");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    cfg->cfg.snapshot_stride = stride;
    return BWS_OK;
}

bws_status bws_run_scenario(const bws_config* cfg, bws_result** out) {
    if (!cfg || !out) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto result = std::make_unique<bws_result>();
        result->res = bws::run_scenario(cfg->cfg);
        *out = result.release();
        return BWS_OK;
    });
}

void bws_result_free(bws_result* result) { delete result; }

bws_status bws_result_summary_json(const bws_result* result, char** out_json) {
    if (!result || !out_json) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out_json = dup_string(bws::summary_json(result->res));
        return *out_json ? BWS_OK : BWS_ERR_INTERNAL;
    });
}

bws_status bws_result_write_outputs(const bws_result* result, const char* dir) {
    if (!result || !dir) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        bws::write_outputs(result->res, dir);
        return BWS_OK;
    });
}

bws_status bws_result_amplitude_ratio(const bws_result* result, double* out) {
    if (!result || !out) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    *out = result->res.amplitude_ratio();
    return BWS_OK;
}

bws_status bws_result_max_abs_x(const bws_result* result, double* out) {
    if (!result || !out) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    *out = result->res.max_abs_x;
    return BWS_OK;
}

bws_status bws_result_final_x(const bws_result* result, double* out) {
    if (!result || !out) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    *out = result->res.final_x;
    return BWS_OK;
}

const char* bws_result_halt_reason(const bws_result* result) {
    if (!result) return "invalid";
    return bws::halt_reason_name(result->res.halt);
}

bws_status bws_run_convergence(const bws_config* cfg, const char* axis, const char* mode,
                               const char* dir, char** out_json) {
    if (!cfg || !axis || !mode) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        bws::StudyAxis ax;
        if (std::strcmp(axis, "space") == 0) ax = bws::StudyAxis::space;
        else if (std::strcmp(axis, "time") == 0) ax = bws::StudyAxis::time;
        else throw std::invalid_argument("axis must be 'space' or 'time'");
        bws::StudyMode md;
        if (std::strcmp(mode, "exact") == 0) md = bws::StudyMode::exact_soliton;
        else if (std::strcmp(mode, "relative") == 0) md = bws::StudyMode::self_relative;
        else throw std::invalid_argument("mode must be 'exact' or 'relative'");
        const bws::ConvergenceStudy st = bws::convergence_study(cfg->cfg, ax, md);
        if (dir) st.write(dir);
        if (out_json) {
            *out_json = dup_string(st.to_json());
            if (!*out_json) return BWS_ERR_INTERNAL;
        }
        return BWS_OK;
    });
}

bws_status bws_run_amplitude_study(const bws_config* cfg, const char* dir, char** out_json) {
    if (!cfg) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const bws::AmplitudeStudy st = bws::amplitude_study(cfg->cfg);
        if (dir) st.write(dir);
        if (out_json) {
            *out_json = dup_string(st.to_json());
            if (!*out_json) return BWS_ERR_INTERNAL;
        }
        return BWS_OK;
    });
}

bws_status bws_run_breaking_study(const bws_config* cfg, const char* dir, char** out_json) {
    if (!cfg) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const bws::BreakingStudy st = bws::breaking_study(cfg->cfg);
        if (dir) st.write(dir);
        if (out_json) {
            *out_json = dup_string(st.to_json());
            if (!*out_json) return BWS_ERR_INTERNAL;
        }
        return BWS_OK;
    });
}

bws_status bws_run_displacement_study(const bws_config* cfg, const char* mode, const char* dir,
                                      char** out_json) {
    if (!cfg || !mode) {
        set_error("null argument");
        return BWS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        bws::DisplacementMode md;
        if (std::strcmp(mode, "sweep") == 0) md = bws::DisplacementMode::sweep;
        else if (std::strcmp(mode, "single") == 0) md = bws::DisplacementMode::single;
        else if (std::strcmp(mode, "train") == 0) md = bws::DisplacementMode::train;
        else if (std::strcmp(mode, "ablation") == 0) md = bws::DisplacementMode::ablation;
        else throw std::invalid_argument("mode must be sweep|single|train|ablation");
        const bws::DisplacementStudy st = bws::displacement_study(cfg->cfg, md);
        if (dir) st.write(dir);
        if (out_json) {
            *out_json = dup_string(st.to_json());
            if (!*out_json) return BWS_ERR_INTERNAL;
        }
        return BWS_OK;
    });
}

}  // extern "C"
