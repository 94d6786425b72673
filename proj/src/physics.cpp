#include "bws/physics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bws {

void fluid_height(const std::vector<double>& zeta, const std::vector<double>& b_nodes,
                  double eps, std::vector<double>& h, double& min_h) {
    const std::size_t n = zeta.size();
    h.resize(n);
    double mh = std::numeric_limits<double>::infinity();
    bool bad = false;
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = 1.0 + eps * zeta[i] - b_nodes[i];
        if (std::isnan(h[i])) bad = true;
        else if (h[i] < mh) mh = h[i];
    }
    min_h = bad ? std::numeric_limits<double>::quiet_NaN() : mh;
}

void helmholtz_apply(const std::vector<double>& vbar, double mu, double dx,
                     std::vector<double>& ubar) {
    d2_same_parity(vbar, dx, ubar, Ghost::odd_mid);
    const double c = mu / 3.0;
    for (std::size_t i = 0; i < vbar.size(); ++i) ubar[i] = vbar[i] - c * ubar[i];
}

std::vector<double> helmholtz_apply(const std::vector<double>& vbar, double mu, double dx) {
    std::vector<double> u;
    helmholtz_apply(vbar, mu, dx, u);
    return u;
}

HelmholtzSolver::HelmholtzSolver(std::size_t n_mids, double mu, double dx)
    : n_(n_mids), mu_(mu), dx_(dx) {
    if (n_ < 5) throw std::invalid_argument("HelmholtzSolver: need at least 5 midpoints");
    factorize();
}

void HelmholtzSolver::factorize() {
    const double r = mu_ / (36.0 * dx_ * dx_);
    d_.assign(n_, 0.0);
    e1_.assign(n_, 0.0);
    e2_.assign(n_, 0.0);
    // Symmetric pentadiagonal operator of the midpoint Helmholtz map with
    // the odd wall reflection folded into the first and last rows.
    auto diag = [&](std::size_t i) {
        return (i == 0 || i == n_ - 1) ? 1.0 + 46.0 * r : 1.0 + 30.0 * r;
    };
    auto off1 = [&](std::size_t i) {  // couples i and i+1
        return (i == 0 || i == n_ - 2) ? -17.0 * r : -16.0 * r;
    };
    const double off2 = r;  // couples i and i+2

    std::vector<double> l0(n_), l1(n_, 0.0), l2(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = diag(i);
        if (i >= 1) s -= l1[i - 1] * l1[i - 1];
        if (i >= 2) s -= l2[i - 2] * l2[i - 2];
        if (!(s > 0.0)) throw std::runtime_error("HelmholtzSolver: matrix not positive definite");
        l0[i] = std::sqrt(s);
        if (i + 1 < n_) {
            double t = off1(i);
            if (i >= 1) t -= l2[i - 1] * l1[i - 1];
            l1[i] = t / l0[i];
        }
        if (i + 2 < n_) l2[i] = off2 / l0[i];
    }
    d_ = std::move(l0);
    e1_ = std::move(l1);
    e2_ = std::move(l2);
    work_.resize(n_);
    resid_.resize(n_);
}

void HelmholtzSolver::back_substitute(std::vector<double>& x) const {
    // Forward solve L y = x, then L^T x = y, in place.
    for (std::size_t i = 0; i < n_; ++i) {
        double s = x[i];
        if (i >= 1) s -= e1_[i - 1] * x[i - 1];
        if (i >= 2) s -= e2_[i - 2] * x[i - 2];
        x[i] = s / d_[i];
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        double s = x[ii];
        if (ii + 1 < n_) s -= e1_[ii] * x[ii + 1];
        if (ii + 2 < n_) s -= e2_[ii] * x[ii + 2];
        x[ii] = s / d_[ii];
    }
}

void HelmholtzSolver::solve(const std::vector<double>& ubar, std::vector<double>& vbar) const {
    if (ubar.size() != n_) throw std::invalid_argument("HelmholtzSolver: size mismatch");
    vbar = ubar;
    back_substitute(vbar);
    // One refinement pass against the stencil-defined operator.
    helmholtz_apply(vbar, mu_, dx_, work_);
    for (std::size_t i = 0; i < n_; ++i) resid_[i] = ubar[i] - work_[i];
    back_substitute(resid_);
    for (std::size_t i = 0; i < n_; ++i) vbar[i] += resid_[i];
}

std::vector<double> HelmholtzSolver::solve(const std::vector<double>& ubar) const {
    std::vector<double> v;
    solve(ubar, v);
    return v;
}

void rhs_zeta(const std::vector<double>& zeta, const std::vector<double>& vbar,
              const BottomFields& bottom, double x_dot, const PhysicalParams& p, double dx,
              std::vector<double>& E, double& min_h,
              std::vector<double>& h_nodes, std::vector<double>& h_mids,
              std::vector<double>& flux_mids) {
    fluid_height(zeta, bottom.b_nodes, p.eps, h_nodes, min_h);
    interp_node_to_mid(h_nodes, h_mids, Ghost::even_node);
    flux_mids.resize(vbar.size());
    for (std::size_t i = 0; i < vbar.size(); ++i) flux_mids[i] = h_mids[i] * vbar[i];
    d1_mid_to_node(flux_mids, dx, E, Ghost::odd_mid);
    const double s = x_dot / p.eps;
    for (std::size_t i = 0; i < E.size(); ++i) E[i] = -E[i] - s * bottom.db_nodes[i];
}

void rhs_momentum(const std::vector<double>& zeta, const std::vector<double>& vbar,
                  const BottomFields& bottom, double x_dot, double x_ddot,
                  const PhysicalParams& p, double dx, std::vector<double>& F,
                  std::vector<double>& dzeta_mids, std::vector<double>& v2_mids,
                  std::vector<double>& dv2_mids) {
    d1_node_to_mid(zeta, dx, dzeta_mids, Ghost::even_node);
    v2_mids.resize(vbar.size());
    for (std::size_t i = 0; i < vbar.size(); ++i) v2_mids[i] = vbar[i] * vbar[i];
    d1_same_parity(v2_mids, dx, dv2_mids, Ghost::even_mid);
    F.resize(vbar.size());
    const double adv = 0.5 * p.eps;
    const double c3 = p.mu / (2.0 * p.eps) * x_dot * x_dot;
    const double c2 = p.mu / (2.0 * p.eps) * x_ddot;
    for (std::size_t i = 0; i < vbar.size(); ++i)
        F[i] = -dzeta_mids[i] - adv * dv2_mids[i] - c3 * bottom.d3b_mids[i] + c2 * bottom.d2b_mids[i];
}

double energy(const FluidState& state, const std::vector<double>& b_nodes, double x_dot,
              const PhysicalParams& p, const StaggeredGrid& grid) {
    const std::size_t n = grid.n_nodes;
    const std::size_t last = n - 1;
    const double dx = grid.dx;

    std::vector<double> h_nodes, h_mids;
    double min_h = 0.0;
    fluid_height(state.zeta, b_nodes, p.eps, h_nodes, min_h);
    interp_node_to_mid(h_nodes, h_mids, Ghost::even_node);

    std::vector<double> zeta_mids = interp_node_to_mid(state.zeta, Ghost::even_node);
    std::vector<double> v_nodes = interp_mid_to_node(state.vbar, Ghost::odd_mid);
    std::vector<double> dv_mids = d1_same_parity(state.vbar, dx, Ghost::odd_mid);
    std::vector<double> dv_nodes = d1_mid_to_node(state.vbar, dx, Ghost::odd_mid);

    std::vector<double> f_nodes(n), f_mids(n - 1);

    for (std::size_t i = 0; i < n; ++i) f_nodes[i] = state.zeta[i] * state.zeta[i];
    for (std::size_t i = 0; i + 1 < n; ++i) f_mids[i] = zeta_mids[i] * zeta_mids[i];
    const double e_zeta = simpson_support(f_nodes, f_mids, 0, last, dx);

    for (std::size_t i = 0; i < n; ++i) f_nodes[i] = h_nodes[i] * v_nodes[i] * v_nodes[i];
    for (std::size_t i = 0; i + 1 < n; ++i) f_mids[i] = h_mids[i] * state.vbar[i] * state.vbar[i];
    const double e_kin = simpson_support(f_nodes, f_mids, 0, last, dx);

    for (std::size_t i = 0; i < n; ++i) f_nodes[i] = h_nodes[i] * dv_nodes[i] * dv_nodes[i];
    for (std::size_t i = 0; i + 1 < n; ++i) f_mids[i] = h_mids[i] * dv_mids[i] * dv_mids[i];
    const double e_disp = simpson_support(f_nodes, f_mids, 0, last, dx);

    return 0.5 * e_zeta + 0.5 * e_kin + 0.5 * (p.mu / 3.0) * e_disp +
           x_dot * x_dot / (2.0 * p.eps);
}

double mass(const std::vector<double>& zeta, const StaggeredGrid& grid) {
    std::vector<double> zeta_mids = interp_node_to_mid(zeta, Ghost::even_node);
    return simpson_support(zeta, zeta_mids, 0, grid.n_nodes - 1, grid.dx);
}

}  // namespace bws
