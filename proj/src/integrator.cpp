#include "bws/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace bws {

static_assert(23 - 16 + 5 == 12, "Adams-Bashforth weights must sum to one");
static_assert(9 + 19 - 5 + 1 == 24, "Adams-Moulton weights must sum to one");

CflResult cfl_check(double dt, double dx, double g_dim, double h0_dim) {
    if (!(dt > 0.0) || !(dx > 0.0) || !(g_dim > 0.0) || !(h0_dim > 0.0))
        throw std::invalid_argument("cfl_check: all inputs must be positive");
    CflResult r;
    r.ratio = std::sqrt(g_dim * h0_dim) * dt / dx;
    r.pass = r.ratio <= 0.5 + 1e-12;
    return r;
}

const char* halt_reason_name(HaltReason r) {
    switch (r) {
        case HaltReason::none: return "none";
        case HaltReason::non_physical_height: return "non_physical_height";
        case HaltReason::solid_touched_boundary: return "solid_touched_boundary";
        case HaltReason::contact_lost: return "contact_lost";
        case HaltReason::wave_breaking: return "wave_breaking";
    }
    return "unknown";
}

Stepper::Stepper(const StaggeredGrid& grid, const Bathymetry* bathy, const PhysicalParams& params,
                 FluidState initial, const StepperOptions& opts)
    : grid_(grid), bathy_(opts.mode == BottomMode::flat ? nullptr : bathy),
      params_(params), opts_(opts), state_(std::move(initial)),
      helmholtz_(grid.n_mids(), params.mu, grid.dx) {
    if (state_.zeta.size() != grid_.n_nodes || state_.vbar.size() != grid_.n_mids())
        throw std::invalid_argument("Stepper: state does not match grid");
    if (state_.ubar.size() != grid_.n_mids())
        helmholtz_apply(state_.vbar, params_.mu, grid_.dx, state_.ubar);
    if (!(opts_.dt > 0.0)) throw std::invalid_argument("Stepper: dt must be positive");
    if (opts_.corrector_iterations < 1) opts_.corrector_iterations = 1;
    if (opts_.mode != BottomMode::flat && bathy_ == nullptr)
        throw std::invalid_argument("Stepper: bottom mode requires a bathymetry");

    const std::size_t n = grid_.n_nodes, m = grid_.n_mids();
    bottom_.b_nodes.assign(n, 0.0);
    bottom_.db_nodes.assign(n, 0.0);
    bottom_.b_mids.assign(m, 0.0);
    bottom_.db_mids.assign(m, 0.0);
    bottom_.d2b_mids.assign(m, 0.0);
    bottom_.d3b_mids.assign(m, 0.0);
    bottom_half_ = bottom_;
    bottom_next_ = bottom_;
    if (bathy_) {
        resample_bottom(*bathy_, 0.0, grid_, bottom_);
        bottom_half_ = bottom_;
        bottom_next_ = bottom_;
    }

    for (auto& e : e_hist_) e.assign(n, 0.0);
    for (auto& f : f_hist_) f.assign(m, 0.0);

    // Virtual displacement history consistent with X(0) = 0, Xdot(0) = v0
    // and the initial continuous-law acceleration; it lets the centred
    // solid update run from the very first step.
    solid_.x_curr = 0.0;
    double a0 = 0.0;
    const double v0 = coupled() ? opts_.solid_v0 : 0.0;
    if (coupled()) {
        zeta_mids_ = interp_node_to_mid(state_.zeta, Ghost::even_node);
        const double c0 = coeff_C(state_.zeta, zeta_mids_, 0.0, *bathy_, params_, grid_);
        const double cbar0 = coeff_Cbar(state_.zeta, zeta_mids_, 0.0, *bathy_, params_, grid_);
        a0 = -c0 * v0 / (std::abs(v0) + params_.delta) + cbar0;
    }
    const double dt = opts_.dt;
    solid_.x_prev = -dt * v0 + 0.5 * dt * dt * a0;
    solid_.x_prev2 = -2.0 * dt * v0 + 2.0 * dt * dt * a0;
    solid_.v_central = v0;
    solid_.a_central = a0;
}

bool Stepper::eval_rhs(const std::vector<double>& zeta, const std::vector<double>& vbar,
                       const BottomFields& bottom, double x_dot, double x_ddot,
                       std::vector<double>& E, std::vector<double>& F) {
    double min_h = 0.0;
    rhs_zeta(zeta, vbar, bottom, x_dot, params_, grid_.dx, E, min_h, h_nodes_, h_mids_,
             flux_mids_);
    if (!(min_h > params_.h_min)) {
        halt_ = HaltReason::non_physical_height;
        return false;
    }
    rhs_momentum(zeta, vbar, bottom, x_dot, x_ddot, params_, grid_.dx, F, dzeta_mids_, v2_mids_,
                 dv2_mids_);
    return true;
}

bool Stepper::solid_update(double& x_next) {
    interp_node_to_mid(state_.zeta, zeta_mids_, Ghost::even_node);
    double C = 0.0;
    try {
        C = coeff_C(state_.zeta, zeta_mids_, solid_.x_curr, *bathy_, params_, grid_);
    } catch (const std::runtime_error&) {
        halt_ = HaltReason::contact_lost;
        return false;
    }
    double cbar = coeff_Cbar(state_.zeta, zeta_mids_, solid_.x_curr, *bathy_, params_, grid_);
    if (time() >= opts_.ablate_pressure_from) cbar = 0.0;
    x_next = solid_step(solid_, C, cbar, opts_.dt, params_.delta);
    if (!support_inside(*bathy_, x_next, grid_)) {
        halt_ = HaltReason::solid_touched_boundary;
        return false;
    }
    return true;
}

void Stepper::capture_level(bool with_diagnostics, double v_central) {
    level_time_ = time();
    level_x_ = solid_.x_curr;
    level_v_ = v_central;
    if (with_diagnostics) {
        level_energy_ = energy(state_, bottom_.b_nodes, v_central, params_, grid_);
        level_mass_ = mass(state_.zeta, grid_);
    }
}

bool Stepper::advance(bool with_diagnostics) {
    if (halt_ != HaltReason::none) return false;
    const double dt = opts_.dt;

    // Solid first: it only needs the current elevation.
    double x_next = solid_.x_curr;
    double v_c = 0.0, a_c = 0.0, v_b = 0.0;
    if (coupled()) {
        if (!solid_update(x_next)) return false;
        solid_kinematics(solid_, x_next, dt, v_c, a_c, v_b);
        solid_.v_central = v_c;
        solid_.a_central = a_c;
    }

    // Level-n right-hand sides become this step's history entry.
    auto& e_n = e_hist_[static_cast<std::size_t>(n_ % 3)];
    auto& f_n = f_hist_[static_cast<std::size_t>(n_ % 3)];
    if (!eval_rhs(state_.zeta, state_.vbar, bottom_, v_c, a_c, e_n, f_n)) return false;

    capture_level(with_diagnostics, v_c);

    const bool ok = (n_ < 2) ? fluid_rk4(x_next, v_c, a_c, e_n, f_n)
                             : fluid_pc(x_next, e_n, f_n);
    if (!ok) return false;

    if (coupled()) {
        solid_.x_prev2 = solid_.x_prev;
        solid_.x_prev = solid_.x_curr;
        solid_.x_curr = x_next;
        resample_bottom(*bathy_, x_next, grid_, bottom_);
    }
    n_ += 1;
    return true;
}

bool Stepper::fluid_rk4(double x_next, double v_c, double a_c,
                        const std::vector<double>& e_n, const std::vector<double>& f_n) {
    const double dt = opts_.dt;
    const std::size_t n = grid_.n_nodes, m = grid_.n_mids();

    const BottomFields* b_half = &bottom_;
    const BottomFields* b_next = &bottom_;
    if (coupled()) {
        const double x_half = solid_.x_curr + 0.5 * dt * v_c + 0.125 * dt * dt * a_c;
        if (!support_inside(*bathy_, x_half, grid_) || !support_inside(*bathy_, x_next, grid_)) {
            halt_ = HaltReason::solid_touched_boundary;
            return false;
        }
        resample_bottom(*bathy_, x_half, grid_, bottom_half_);
        resample_bottom(*bathy_, x_next, grid_, bottom_next_);
        b_half = &bottom_half_;
        b_next = &bottom_next_;
    }
    const double v_half = v_c + 0.5 * dt * a_c;
    const double v_next = v_c + dt * a_c;

    stage_zeta_.resize(n);
    stage_ubar_.resize(m);

    auto form_stage = [&](const std::vector<double>& kz, const std::vector<double>& ku,
                          double frac) {
        for (std::size_t i = 0; i < n; ++i) stage_zeta_[i] = state_.zeta[i] + frac * dt * kz[i];
        for (std::size_t i = 0; i < m; ++i) stage_ubar_[i] = state_.ubar[i] + frac * dt * ku[i];
        helmholtz_.solve(stage_ubar_, stage_vbar_);
    };

    form_stage(e_n, f_n, 0.5);
    if (!eval_rhs(stage_zeta_, stage_vbar_, *b_half, v_half, a_c, k_zeta_[1], k_ubar_[1]))
        return false;
    form_stage(k_zeta_[1], k_ubar_[1], 0.5);
    if (!eval_rhs(stage_zeta_, stage_vbar_, *b_half, v_half, a_c, k_zeta_[2], k_ubar_[2]))
        return false;
    form_stage(k_zeta_[2], k_ubar_[2], 1.0);
    if (!eval_rhs(stage_zeta_, stage_vbar_, *b_next, v_next, a_c, k_zeta_[3], k_ubar_[3]))
        return false;

    for (std::size_t i = 0; i < n; ++i)
        state_.zeta[i] += dt / 6.0 * (e_n[i] + 2.0 * k_zeta_[1][i] + 2.0 * k_zeta_[2][i] +
                                      k_zeta_[3][i]);
    for (std::size_t i = 0; i < m; ++i)
        state_.ubar[i] += dt / 6.0 * (f_n[i] + 2.0 * k_ubar_[1][i] + 2.0 * k_ubar_[2][i] +
                                      k_ubar_[3][i]);
    helmholtz_.solve(state_.ubar, state_.vbar);
    return true;
}

bool Stepper::fluid_pc(double x_next, const std::vector<double>& e_n,
                       const std::vector<double>& f_n) {
    const double dt = opts_.dt;
    const std::size_t n = grid_.n_nodes, m = grid_.n_mids();
    const auto& e_1 = e_hist_[static_cast<std::size_t>((n_ - 1) % 3)];
    const auto& e_2 = e_hist_[static_cast<std::size_t>((n_ - 2) % 3)];
    const auto& f_1 = f_hist_[static_cast<std::size_t>((n_ - 1) % 3)];
    const auto& f_2 = f_hist_[static_cast<std::size_t>((n_ - 2) % 3)];

    // Adams-Bashforth predictor.
    zeta_p_.resize(n);
    ubar_p_.resize(m);
    for (std::size_t i = 0; i < n; ++i)
        zeta_p_[i] = state_.zeta[i] + dt * (kAb3[0] * e_n[i] + kAb3[1] * e_1[i] + kAb3[2] * e_2[i]);
    for (std::size_t i = 0; i < m; ++i)
        ubar_p_[i] = state_.ubar[i] + dt * (kAb3[0] * f_n[i] + kAb3[1] * f_1[i] + kAb3[2] * f_2[i]);
    helmholtz_.solve(ubar_p_, vbar_p_);

    // Corrector sources at the predicted level: translated bottom and
    // second-order backward solid estimates (no look-ahead exists yet).
    const BottomFields* b_next = &bottom_;
    double v_fwd = 0.0, a_fwd = 0.0;
    if (coupled()) {
        resample_bottom(*bathy_, x_next, grid_, bottom_next_);
        b_next = &bottom_next_;
        v_fwd = (3.0 * x_next - 4.0 * solid_.x_curr + solid_.x_prev) / (2.0 * dt);
        a_fwd = (2.0 * x_next - 5.0 * solid_.x_curr + 4.0 * solid_.x_prev - solid_.x_prev2) /
                (dt * dt);
    }

    // Adams-Moulton correction, optionally iterated.
    for (int it = 0; it < opts_.corrector_iterations; ++it) {
        if (!eval_rhs(zeta_p_, vbar_p_, *b_next, v_fwd, a_fwd, e_star_, f_star_)) return false;
        zeta_c_.resize(n);
        ubar_c_.resize(m);
        for (std::size_t i = 0; i < n; ++i)
            zeta_c_[i] = state_.zeta[i] + dt * (kAm4[0] * e_star_[i] + kAm4[1] * e_n[i] +
                                                kAm4[2] * e_1[i] + kAm4[3] * e_2[i]);
        for (std::size_t i = 0; i < m; ++i)
            ubar_c_[i] = state_.ubar[i] + dt * (kAm4[0] * f_star_[i] + kAm4[1] * f_n[i] +
                                                kAm4[2] * f_1[i] + kAm4[3] * f_2[i]);
        helmholtz_.solve(ubar_c_, vbar_c_);
        std::swap(zeta_p_, zeta_c_);
        std::swap(ubar_p_, ubar_c_);
        std::swap(vbar_p_, vbar_c_);
    }
    state_.zeta.swap(zeta_p_);
    state_.ubar.swap(ubar_p_);
    state_.vbar.swap(vbar_p_);
    return true;
}

double Stepper::solid_v_backward() const {
    return (3.0 * solid_.x_curr - 4.0 * solid_.x_prev + solid_.x_prev2) / (2.0 * opts_.dt);
}

double Stepper::energy_now() const {
    return energy(state_, bottom_.b_nodes, coupled() ? solid_v_backward() : 0.0, params_, grid_);
}

double Stepper::mass_now() const { return mass(state_.zeta, grid_); }

}  // namespace bws
