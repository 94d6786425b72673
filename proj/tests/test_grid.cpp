#include "bws/grid.hpp"

#include <cmath>

#include "bws/stencils.hpp"
#include "testkit.hpp"

using namespace bws;

TK_TEST(build_grid_node_counts) {
    TK_CHECK_THROWS(build_grid(1.0, 0.25));  // 5 nodes: too few
    TK_CHECK_THROWS(build_grid(-1.0, 0.1));
    TK_CHECK_THROWS(build_grid(10.0, 0.0));

    auto g = build_grid(2.0, 0.25);
    TK_CHECK(g.n_nodes == 9);
    TK_CHECK(g.n_mids() == 8);

    TK_CHECK(build_grid(1000.0, 0.05).n_nodes == 20001);
    TK_CHECK(build_grid(2000.0, 0.05).n_nodes == 40001);
}

TK_TEST(grid_coordinates) {
    auto g = build_grid(2.0, 0.25);
    for (std::size_t i = 0; i < g.n_mids(); ++i)
        TK_CHECK(g.mid(i) == g.node(i) + g.dx / 2.0);
    TK_CHECK_CLOSE(g.node(g.n_nodes - 1), g.domain_length, 1e-12);
}

TK_TEST(gaussian_bottom_shape) {
    auto b = gaussian_bottom(0.3, 1.0, 0.0, 1e-4);
    TK_CHECK_CLOSE(b.height(0.0), 0.3, 1e-15);  // peak equals beta
    const double hw = std::sqrt(std::log(0.3 / 1e-4) / 10.0);
    TK_CHECK_CLOSE(b.support_half_width, hw, 1e-12);
    TK_CHECK_CLOSE(hw, 0.8948, 5e-4);
    TK_CHECK(b.height(hw * 0.9999) > 1e-4);
    TK_CHECK(b.height(hw * 1.0001) == 0.0);
    // Even about the centre.
    TK_CHECK_CLOSE(b.height(0.31), b.height(-0.31), 1e-16);
    TK_CHECK_CLOSE(b.slope(0.0), 0.0, 1e-16);

    TK_CHECK_THROWS(gaussian_bottom(0.3, 1.0, 0.0, 0.4));  // tol >= beta
    TK_CHECK_THROWS(gaussian_bottom(-0.3, 1.0, 0.0, 1e-4));
}

TK_TEST(sample_bottom_translation) {
    auto g = build_grid(40.0, 0.25);
    auto b = gaussian_bottom(0.3, 1.0, 20.0, 1e-4);

    auto f0 = sample_bottom(b, 0.0, g);
    TK_CHECK_CLOSE(f0.b_nodes[80], 0.3, 1e-15);  // node at x = 20
    TK_CHECK_CLOSE(f0.db_nodes[80], 0.0, 1e-16);

    // Spot check one coordinate against the scalar formula for shift 0.5.
    const double shift = 0.5;
    auto f1 = sample_bottom(b, shift, g);
    const double x = g.node(82);
    const double y = x - 20.0 - shift;
    TK_CHECK_CLOSE(f1.b_nodes[82], 0.3 * std::exp(-10.0 * y * y), 1e-15);

    // Translation by whole cells relabels the samples exactly.
    auto f2 = sample_bottom(b, 4.0 * g.dx, g);
    for (std::size_t i = 16; i + 16 < g.n_nodes; ++i)
        TK_CHECK(f2.b_nodes[i] == f0.b_nodes[i - 4]);

    // A shift pushing the support into a wall must signal.
    TK_CHECK_THROWS(sample_bottom(b, 19.2, g));
    TK_CHECK(support_inside(b, 0.0, g));
    TK_CHECK(!support_inside(b, 19.2, g));
}

TK_TEST(analytic_derivative_matches_stencil) {
    // The sampled slope agrees with the same-family stencil applied to the
    // sampled elevation at fourth order (measure the refinement slope).
    auto b = gaussian_bottom(0.3, 1.0, 20.0, 1e-10);  // tiny cut: smooth across the window
    std::vector<double> hs, errs;
    for (double dx : {0.1, 0.05, 0.025, 0.0125}) {
        auto g = build_grid(40.0, dx);
        auto f = sample_bottom(b, 0.0, g);
        auto d = d1_same_parity(f.b_nodes, dx, Ghost::even_node);
        double err = 0.0;
        // Compare well inside the support to keep the truncation cut out.
        std::size_t j, k;
        support_node_range(g, 19.0, 21.0, j, k);
        for (std::size_t i = j; i <= k; ++i) err = std::max(err, std::abs(d[i] - f.db_nodes[i]));
        hs.push_back(dx);
        errs.push_back(err);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const double x = std::log(hs[i]), y = std::log(errs[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(hs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    TK_CHECK(slope >= 3.5);
}

TK_TEST(support_integral_translation_invariant) {
    // Simpson over the bracketing nodes is unchanged under whole-cell
    // translations (identical summands, shifted indices).
    auto g = build_grid(60.0, 0.05);
    auto b = gaussian_bottom(0.3, 1.0, 20.0, 1e-4);
    auto integral_at = [&](double shift) {
        auto f = sample_bottom(b, shift, g);
        std::size_t j, k;
        support_node_range(g, b.support_left(shift), b.support_right(shift), j, k);
        return simpson_support(f.b_nodes, f.b_mids, j, k, g.dx);
    };
    const double ref = integral_at(0.0);
    TK_CHECK(ref > 0.0);
    for (int cells : {1, 7, 40, 161}) {
        const double val = integral_at(g.dx * static_cast<double>(cells));
        TK_CHECK_CLOSE(val / ref, 1.0, 1e-10);
    }
    // And the quadrature itself sits close to the analytic value.
    TK_CHECK_CLOSE(ref, b.analytic_integral(), 2e-4 * ref);
}

TK_TEST(support_node_range_outward) {
    auto g = build_grid(10.0, 0.5);
    std::size_t j, k;
    support_node_range(g, 2.3, 4.1, j, k);
    TK_CHECK(j == 4);   // node 4 at x = 2.0 <= 2.3
    TK_CHECK(k == 9);   // node 9 at x = 4.5 >= 4.1
    support_node_range(g, 2.0, 4.0, j, k);
    TK_CHECK(j == 4 && k == 8);  // aligned edges stay put
}

TK_MAIN()
