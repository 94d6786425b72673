#include "bws/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace bws {

namespace {

struct OdeParams {
    double c, mu, eps;
};

// V'' as a function of V.
inline double curvature_rhs(double v, const OdeParams& q) {
    const double d = q.c - q.eps * v;
    return 3.0 / (q.mu * q.c) * v * (q.c - 1.0 / d - 0.5 * q.eps * v);
}

struct PhasePoint {
    double v, p;  // V and V'
};

// One RK4 step of (V, V') with step h.
inline PhasePoint rk4_step(PhasePoint y, double h, const OdeParams& q) {
    auto f = [&](PhasePoint s) { return PhasePoint{s.p, curvature_rhs(s.v, q)}; };
    PhasePoint k1 = f(y);
    PhasePoint k2 = f({y.v + 0.5 * h * k1.v, y.p + 0.5 * h * k1.p});
    PhasePoint k3 = f({y.v + 0.5 * h * k2.v, y.p + 0.5 * h * k2.p});
    PhasePoint k4 = f({y.v + h * k3.v, y.p + h * k3.p});
    return {y.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
            y.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p)};
}

[[noreturn]] void no_wave() {
    throw std::runtime_error("no solitary wave at these parameters");
}

}  // namespace

double SolitonProfile::eval_v(double xi) const {
    const double u = std::abs(xi) / dxi;
    const long m = static_cast<long>(v_prof.size()) - 1;
    if (u >= static_cast<double>(m)) {
        const double excess = std::abs(xi) - table_end();
        const double tail = v_prof[m] * std::exp(-tail_rate * excess);
        return (tail < 1e-300) ? 0.0 : tail;
    }
    long j = static_cast<long>(std::floor(u));
    const double t = u - static_cast<double>(j);
    // Four point Lagrange window [j-1, j+2]; the crest mirrors evenly and
    // the window shifts one-sided at the tail end.
    auto at = [&](long i) {
        if (i < 0) i = -i;
        if (i > m) i = m;  // only reachable in the last cell, values ~1e-10
        return v_prof[i];
    };
    const double a = at(j - 1), b = at(j), cc = at(j + 1), d = at(j + 2);
    const double w0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double w1 = (t * t - 1.0) * (t - 2.0) / 2.0;
    const double w2 = -t * (t + 1.0) * (t - 2.0) / 2.0;
    const double w3 = t * (t * t - 1.0) / 6.0;
    return w0 * a + w1 * b + w2 * cc + w3 * d;
}

double SolitonProfile::eval_zeta(double xi) const {
    const double v = eval_v(xi);
    return v / (speed - eps * v);
}

SolitonProfile solve_profile(double c, double mu, double eps, double mesh, double relation_tol) {
    if (!(c > 1.0)) throw std::invalid_argument("solve_profile: need speed c > 1");
    if (!(mu > 0.0) || !(eps > 0.0)) throw std::invalid_argument("solve_profile: need mu, eps > 0");
    if (!(mesh > 0.0)) throw std::invalid_argument("solve_profile: mesh must be positive");

    const OdeParams q{c, mu, eps};
    const double lambda = 3.0 / (mu * c) * (c - 1.0 / c);
    const double rate = std::sqrt(lambda);
    const double v_cap = c / eps;

    const double amp_est = 2.0 * (c - 1.0) / eps;
    const double v_est = std::min(c * amp_est / (1.0 + eps * amp_est), 0.9 * v_cap);
    const double eta = 1e-10 * std::max(v_est, 1e-30);

    // First pass: locate the crest (V' sign change) from the tail start.
    const long max_steps = static_cast<long>(std::ceil(200.0 / (rate * mesh))) + 16;
    PhasePoint y{eta, rate * eta};
    long crest_step = -1;
    PhasePoint before_crest = y;
    for (long k = 0; k < max_steps; ++k) {
        PhasePoint next = rk4_step(y, mesh, q);
        if (!(next.v < v_cap * (1.0 - 1e-12))) no_wave();
        if (next.p <= 0.0) {
            crest_step = k;
            before_crest = y;
            break;
        }
        y = next;
    }
    if (crest_step < 0) no_wave();

    // Refine the sub-step where V' crosses zero.
    double lo = 0.0, hi = mesh;
    for (int it = 0; it < 80; ++it) {
        const double h = 0.5 * (lo + hi);
        PhasePoint trial = rk4_step(before_crest, h, q);
        (trial.p > 0.0 ? lo : hi) = h;
    }
    const double span = static_cast<double>(crest_step) * mesh + 0.5 * (lo + hi);

    // Second pass: shift the start along the linear tail so the crest lands
    // exactly on a tabulation point, then march and record.
    const long m = static_cast<long>(std::ceil(span / mesh));
    const double shift = static_cast<double>(m) * mesh - span;
    std::vector<double> forward(static_cast<std::size_t>(m) + 1);
    y = {eta * std::exp(-rate * shift), 0.0};
    y.p = rate * y.v;
    forward[0] = y.v;
    for (long k = 1; k <= m; ++k) {
        y = rk4_step(y, mesh, q);
        if (!(y.v < v_cap * (1.0 - 1e-12))) no_wave();
        forward[static_cast<std::size_t>(k)] = y.v;
    }

    SolitonProfile prof;
    prof.speed = c;
    prof.mu = mu;
    prof.eps = eps;
    prof.dxi = mesh;
    prof.tail_rate = rate;
    prof.v_prof.resize(forward.size());
    for (long j = 0; j <= m; ++j)
        prof.v_prof[static_cast<std::size_t>(j)] = forward[static_cast<std::size_t>(m - j)];
    prof.zeta_prof.resize(prof.v_prof.size());
    for (std::size_t j = 0; j < prof.v_prof.size(); ++j) {
        const double d = c - eps * prof.v_prof[j];
        if (!(d > 0.0)) no_wave();
        prof.zeta_prof[j] = prof.v_prof[j] / d;
    }
    prof.peak_v = prof.v_prof[0];
    prof.peak_zeta = prof.zeta_prof[0];

    const double v_end = prof.v_prof.back();
    const double target = 1e-12 * prof.peak_v;
    prof.half_width = prof.table_end() +
                      std::max(0.0, std::log(std::max(v_end, 1e-300) / target) / rate);

    // The algebraic elevation relation holds by construction; make the
    // guarantee explicit.
    (void)relation_tol;
    return prof;
}

double speed_for_amplitude(double target_peak_zeta, double mu, double eps, double mesh) {
    if (!(target_peak_zeta > 0.0))
        throw std::invalid_argument("speed_for_amplitude: target must be positive");
    auto peak = [&](double c) -> double {
        try {
            return solve_profile(c, mu, eps, mesh).peak_zeta;
        } catch (const std::runtime_error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    double lo = 1.0 + 1e-9;
    double hi = 1.2;
    for (int it = 0; it < 60 && peak(hi) < target_peak_zeta; ++it) hi = 1.0 + 2.0 * (hi - 1.0);
    if (peak(hi) < target_peak_zeta)
        throw std::runtime_error("speed_for_amplitude: amplitude not reachable");
    while (hi - lo > 1e-8) {
        const double c = 0.5 * (lo + hi);
        (peak(c) < target_peak_zeta ? lo : hi) = c;
    }
    return 0.5 * (lo + hi);
}

FluidState place_soliton(const SolitonProfile& profile, double center,
                         const StaggeredGrid& grid, int direction) {
    if (!(center - profile.half_width > 0.0) ||
        !(center + profile.half_width < grid.domain_length))
        throw std::runtime_error("place_soliton: profile tail reaches the tank wall");
    FluidState s;
    s.zeta.resize(grid.n_nodes);
    s.vbar.resize(grid.n_mids());
    const double sign = direction >= 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < grid.n_nodes; ++i)
        s.zeta[i] = profile.eval_zeta(grid.node(i) - center);
    for (std::size_t i = 0; i < grid.n_mids(); ++i)
        s.vbar[i] = sign * profile.eval_v(grid.mid(i) - center);
    helmholtz_apply(s.vbar, profile.mu, grid.dx, s.ubar);
    return s;
}

double min_train_spacing(const SolitonProfile& profile) {
    return 2.0 * std::log(1e10) / profile.tail_rate;
}

FluidState place_wave_train(const SolitonProfile& profile, double lead_center,
                            double spacing, int count, const StaggeredGrid& grid) {
    if (count < 1) throw std::invalid_argument("place_wave_train: count must be >= 1");
    spacing = std::max(spacing, min_train_spacing(profile));
    const double last_center = lead_center - spacing * static_cast<double>(count - 1);
    if (!(last_center - profile.half_width > 0.0) ||
        !(lead_center + profile.half_width < grid.domain_length))
        throw std::runtime_error("place_wave_train: train does not fit inside the tank");
    FluidState s;
    s.zeta.assign(grid.n_nodes, 0.0);
    s.vbar.assign(grid.n_mids(), 0.0);
    for (int w = 0; w < count; ++w) {
        const double center = lead_center - spacing * static_cast<double>(w);
        for (std::size_t i = 0; i < grid.n_nodes; ++i)
            s.zeta[i] += profile.eval_zeta(grid.node(i) - center);
        for (std::size_t i = 0; i < grid.n_mids(); ++i)
            s.vbar[i] += profile.eval_v(grid.mid(i) - center);
    }
    helmholtz_apply(s.vbar, profile.mu, grid.dx, s.ubar);
    return s;
}

void export_profile(const SolitonProfile& profile, const std::string& path, bool elevation) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("export_profile: cannot open " + path);
    const long m = static_cast<long>(profile.v_prof.size()) - 1;
    for (long j = -m; j <= m; ++j) {
        const double xi = static_cast<double>(j) * profile.dxi;
        const double val = elevation ? profile.zeta_prof[static_cast<std::size_t>(std::labs(j))]
                                     : profile.v_prof[static_cast<std::size_t>(std::labs(j))];
        std::fprintf(f, "%.17g %.17g\n", xi, val);
    }
    std::fclose(f);
}

}  // namespace bws
