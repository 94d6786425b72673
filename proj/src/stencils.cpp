#include "bws/stencils.hpp"

#include <cassert>
#include <stdexcept>

namespace bws {

namespace {

// Value of a field extended past its ends by the wall reflection rule.
// Node fields have the wall on the first/last sample; midpoint fields have
// it half a cell outside.
inline double gval(const std::vector<double>& f, long i, Ghost rule) {
    const long n = static_cast<long>(f.size());
    if (i >= 0 && i < n) return f[static_cast<std::size_t>(i)];
    switch (rule) {
        case Ghost::even_node:
            if (i < 0) return f[static_cast<std::size_t>(-i)];
            return f[static_cast<std::size_t>(2 * (n - 1) - i)];
        case Ghost::odd_mid:
            if (i < 0) return -f[static_cast<std::size_t>(-1 - i)];
            return -f[static_cast<std::size_t>(2 * n - 1 - i)];
        case Ghost::even_mid:
            if (i < 0) return f[static_cast<std::size_t>(-1 - i)];
            return f[static_cast<std::size_t>(2 * n - 1 - i)];
    }
    return 0.0;
}

}  // namespace

void interp_node_to_mid(const std::vector<double>& nodes, std::vector<double>& mids, Ghost rule) {
    const long n = static_cast<long>(nodes.size());
    if (n < 4) throw std::invalid_argument("interp_node_to_mid: need at least 4 nodes");
    mids.resize(nodes.size() - 1);
    const long m = n - 1;
    mids[0] = (-gval(nodes, -1, rule) + 9.0 * nodes[0] + 9.0 * nodes[1] - nodes[2]) / 16.0;
    for (long i = 1; i < m - 1; ++i)
        mids[i] = (-nodes[i - 1] + 9.0 * nodes[i] + 9.0 * nodes[i + 1] - nodes[i + 2]) / 16.0;
    mids[m - 1] = (-nodes[m - 2] + 9.0 * nodes[m - 1] + 9.0 * nodes[m] - gval(nodes, m + 1, rule)) / 16.0;
}

void interp_mid_to_node(const std::vector<double>& mids, std::vector<double>& nodes, Ghost rule) {
    const long m = static_cast<long>(mids.size());
    if (m < 4) throw std::invalid_argument("interp_mid_to_node: need at least 4 midpoints");
    nodes.resize(mids.size() + 1);
    const long n = m + 1;
    for (long i = 0; i < n; ++i) {
        if (i >= 2 && i <= m - 2) {
            nodes[i] = (-mids[i - 2] + 9.0 * mids[i - 1] + 9.0 * mids[i] - mids[i + 1]) / 16.0;
        } else {
            nodes[i] = (-gval(mids, i - 2, rule) + 9.0 * gval(mids, i - 1, rule) +
                        9.0 * gval(mids, i, rule) - gval(mids, i + 1, rule)) / 16.0;
        }
    }
}

void d1_same_parity(const std::vector<double>& f, double dx, std::vector<double>& out, Ghost rule) {
    const long n = static_cast<long>(f.size());
    if (n < 5) throw std::invalid_argument("d1_same_parity: need at least 5 samples");
    out.resize(f.size());
    const double s = 1.0 / (12.0 * dx);
    for (long i = 0; i < 2; ++i)
        out[i] = (gval(f, i - 2, rule) - 8.0 * gval(f, i - 1, rule) + 8.0 * f[i + 1] - f[i + 2]) * s;
    for (long i = 2; i < n - 2; ++i)
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * s;
    for (long i = n - 2; i < n; ++i)
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * gval(f, i + 1, rule) - gval(f, i + 2, rule)) * s;
}

void d1_node_to_mid(const std::vector<double>& nodes, double dx, std::vector<double>& mids, Ghost rule) {
    const long n = static_cast<long>(nodes.size());
    if (n < 4) throw std::invalid_argument("d1_node_to_mid: need at least 4 nodes");
    mids.resize(nodes.size() - 1);
    const long m = n - 1;
    const double s = 1.0 / (24.0 * dx);
    mids[0] = (gval(nodes, -1, rule) - 27.0 * nodes[0] + 27.0 * nodes[1] - nodes[2]) * s;
    for (long i = 1; i < m - 1; ++i)
        mids[i] = (nodes[i - 1] - 27.0 * nodes[i] + 27.0 * nodes[i + 1] - nodes[i + 2]) * s;
    mids[m - 1] = (nodes[m - 2] - 27.0 * nodes[m - 1] + 27.0 * nodes[m] - gval(nodes, m + 1, rule)) * s;
}

void d1_mid_to_node(const std::vector<double>& mids, double dx, std::vector<double>& nodes, Ghost rule) {
    const long m = static_cast<long>(mids.size());
    if (m < 4) throw std::invalid_argument("d1_mid_to_node: need at least 4 midpoints");
    nodes.resize(mids.size() + 1);
    const long n = m + 1;
    const double s = 1.0 / (24.0 * dx);
    for (long i = 0; i < n; ++i) {
        if (i >= 2 && i <= m - 2) {
            nodes[i] = (mids[i - 2] - 27.0 * mids[i - 1] + 27.0 * mids[i] - mids[i + 1]) * s;
        } else {
            nodes[i] = (gval(mids, i - 2, rule) - 27.0 * gval(mids, i - 1, rule) +
                        27.0 * gval(mids, i, rule) - gval(mids, i + 1, rule)) * s;
        }
    }
}

void d2_same_parity(const std::vector<double>& f, double dx, std::vector<double>& out, Ghost rule) {
    const long n = static_cast<long>(f.size());
    if (n < 5) throw std::invalid_argument("d2_same_parity: need at least 5 samples");
    out.resize(f.size());
    const double s = 1.0 / (12.0 * dx * dx);
    for (long i = 0; i < 2; ++i)
        out[i] = (-gval(f, i - 2, rule) + 16.0 * gval(f, i - 1, rule) - 30.0 * f[i] +
                  16.0 * f[i + 1] - f[i + 2]) * s;
    for (long i = 2; i < n - 2; ++i)
        out[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * s;
    for (long i = n - 2; i < n; ++i)
        out[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * gval(f, i + 1, rule) -
                  gval(f, i + 2, rule)) * s;
}

void d3_same_parity(const std::vector<double>& f, double dx, std::vector<double>& out, Ghost rule) {
    const long n = static_cast<long>(f.size());
    if (n < 6) throw std::invalid_argument("d3_same_parity: need at least 6 samples");
    out.resize(f.size());
    const double s = 1.0 / (8.0 * dx * dx * dx);
    for (long i = 0; i < n; ++i) {
        if (i >= 3 && i < n - 3) {
            out[i] = (f[i - 3] - 8.0 * f[i - 2] + 13.0 * f[i - 1] - 13.0 * f[i + 1] +
                      8.0 * f[i + 2] - f[i + 3]) * s;
        } else {
            out[i] = (gval(f, i - 3, rule) - 8.0 * gval(f, i - 2, rule) + 13.0 * gval(f, i - 1, rule) -
                      13.0 * gval(f, i + 1, rule) + 8.0 * gval(f, i + 2, rule) - gval(f, i + 3, rule)) * s;
        }
    }
}

double simpson_support(const std::vector<double>& f_nodes, const std::vector<double>& f_mids,
                       std::size_t j, std::size_t k, double dx) {
    assert(j < k && k < f_nodes.size() && f_mids.size() + 1 == f_nodes.size());
    double node_sum = 0.0;
    for (std::size_t l = j + 1; l < k; ++l) node_sum += f_nodes[l];
    double mid_sum = 0.0;
    for (std::size_t l = j; l < k; ++l) mid_sum += f_mids[l];
    return dx / 6.0 * (f_nodes[j] + f_nodes[k] + 2.0 * node_sum + 4.0 * mid_sum);
}

std::vector<double> interp_node_to_mid(const std::vector<double>& nodes, Ghost rule) {
    std::vector<double> out;
    interp_node_to_mid(nodes, out, rule);
    return out;
}
std::vector<double> interp_mid_to_node(const std::vector<double>& mids, Ghost rule) {
    std::vector<double> out;
    interp_mid_to_node(mids, out, rule);
    return out;
}
std::vector<double> d1_same_parity(const std::vector<double>& f, double dx, Ghost rule) {
    std::vector<double> out;
    d1_same_parity(f, dx, out, rule);
    return out;
}
std::vector<double> d1_node_to_mid(const std::vector<double>& nodes, double dx, Ghost rule) {
    std::vector<double> out;
    d1_node_to_mid(nodes, dx, out, rule);
    return out;
}
std::vector<double> d1_mid_to_node(const std::vector<double>& mids, double dx, Ghost rule) {
    std::vector<double> out;
    d1_mid_to_node(mids, dx, out, rule);
    return out;
}
std::vector<double> d2_same_parity(const std::vector<double>& f, double dx, Ghost rule) {
    std::vector<double> out;
    d2_same_parity(f, dx, out, rule);
    return out;
}
std::vector<double> d3_same_parity(const std::vector<double>& f, double dx, Ghost rule) {
    std::vector<double> out;
    d3_same_parity(f, dx, out, rule);
    return out;
}

}  // namespace bws
