#include "bws/stencils.hpp"

#include <cmath>
#include <random>

#include "testkit.hpp"

using namespace bws;

namespace {

std::vector<double> sample(double (*f)(double), double x0, double dx, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f(x0 + dx * static_cast<double>(i));
    return v;
}

// Evaluates a polynomial with the given coefficients (lowest order first).
double poly(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

double poly_d1(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c[k];
    return acc;
}

double poly_d2(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 2;)
        acc = acc * x + static_cast<double>(k) * static_cast<double>(k - 1) * c[k];
    return acc;
}

double poly_d3(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 3;)
        acc = acc * x + static_cast<double>(k * (k - 1) * (k - 2)) * c[k];
    return acc;
}

double poly_int(const std::vector<double>& c, double a, double b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
        acc += c[k] / static_cast<double>(k + 1) *
               (std::pow(b, static_cast<double>(k + 1)) - std::pow(a, static_cast<double>(k + 1)));
    return acc;
}

}  // namespace

TK_TEST(interp_constant_and_linear) {
    std::vector<double> ones(12, 1.0);
    auto mids = interp_node_to_mid(ones);
    for (double v : mids) TK_CHECK_CLOSE(v, 1.0, 1e-15);

    const double dx = 0.3;
    auto lin = sample([](double x) { return x; }, 0.0, dx, 12);
    mids = interp_node_to_mid(lin, Ghost::even_mid);  // interior check only
    for (std::size_t i = 1; i + 1 < mids.size(); ++i)
        TK_CHECK_CLOSE(mids[i], dx * static_cast<double>(i) + dx / 2.0, 1e-14);
}

TK_TEST(interp_cubic_hand_value) {
    // x^3 on nodes {0,1,2,3}: midpoint at 1.5 is (-0 + 9 + 72 - 27)/16.
    std::vector<double> f = {0.0, 1.0, 8.0, 27.0};
    auto mids = interp_node_to_mid(f);
    TK_CHECK_CLOSE(mids[1], 3.375, 1e-15);
    TK_CHECK_CLOSE(mids[1], 1.5 * 1.5 * 1.5, 1e-15);
}

TK_TEST(d1_same_parity_basics) {
    std::vector<double> ones(10, 1.0);
    auto d = d1_same_parity(ones, 0.25, Ghost::even_mid);
    for (double v : d) TK_CHECK_CLOSE(v, 0.0, 1e-14);

    // x^4 at x = 2 with dx = 0.5: (f(1) - 8 f(1.5) + 8 f(2.5) - f(3)) / 6 = 32.
    auto f = sample([](double x) { return x * x * x * x; }, 0.0, 0.5, 9);
    d = d1_same_parity(f, 0.5, Ghost::even_mid);
    TK_CHECK_CLOSE(d[4], 32.0, 1e-12);
}

TK_TEST(d1_cross_parity_hand_values) {
    std::vector<double> ones(8, 1.0);
    auto mids = d1_node_to_mid(ones, 0.1);
    for (double v : mids) TK_CHECK_CLOSE(v, 0.0, 1e-13);

    auto lin = sample([](double x) { return x; }, 0.0, 0.2, 8);
    mids = d1_node_to_mid(lin, 0.2, Ghost::even_mid);
    for (std::size_t i = 1; i + 1 < mids.size(); ++i) TK_CHECK_CLOSE(mids[i], 1.0, 1e-13);

    // x^3 on {0,1,2,3} at 1.5: (0 - 27 + 216 - 27)/24 = 6.75 = 3 * 1.5^2.
    std::vector<double> cub = {0.0, 1.0, 8.0, 27.0};
    mids = d1_node_to_mid(cub, 1.0);
    TK_CHECK_CLOSE(mids[1], 6.75, 1e-14);
}

TK_TEST(d2_same_parity_hand_values) {
    std::vector<double> ones(9, 1.0);
    auto d = d2_same_parity(ones, 0.5, Ghost::even_mid);
    for (double v : d) TK_CHECK_CLOSE(v, 0.0, 1e-13);

    auto sq = sample([](double x) { return x * x; }, 0.0, 0.5, 9);
    d = d2_same_parity(sq, 0.5, Ghost::even_mid);
    for (std::size_t i = 2; i + 2 < d.size(); ++i) TK_CHECK_CLOSE(d[i], 2.0, 1e-12);

    // x^4 at x = 1 with dx = 0.5 gives exactly 12.
    auto f = sample([](double x) { return x * x * x * x; }, 0.0, 0.5, 9);
    d = d2_same_parity(f, 0.5, Ghost::even_mid);
    TK_CHECK_CLOSE(d[2], 12.0, 1e-12);
}

TK_TEST(d3_same_parity_hand_values) {
    std::vector<double> ones(10, 1.0);
    auto d = d3_same_parity(ones, 0.5, Ghost::even_mid);
    for (double v : d) TK_CHECK_CLOSE(v, 0.0, 1e-12);

    auto sq = sample([](double x) { return x * x; }, 0.0, 0.5, 10);
    d = d3_same_parity(sq, 0.5, Ghost::even_mid);
    for (std::size_t i = 3; i + 3 < d.size(); ++i) TK_CHECK_CLOSE(d[i], 0.0, 1e-11);

    auto cub = sample([](double x) { return x * x * x; }, 0.0, 0.5, 10);
    d = d3_same_parity(cub, 0.5, Ghost::even_mid);
    for (std::size_t i = 3; i + 3 < d.size(); ++i) TK_CHECK_CLOSE(d[i], 6.0, 1e-11);
}

TK_TEST(simpson_hand_values) {
    // Constant over [0, 1].
    std::vector<double> n1(5, 1.0), m1(4, 1.0);
    TK_CHECK_CLOSE(simpson_support(n1, m1, 0, 4, 0.25), 1.0, 1e-15);

    // Linear: exact 0.5.
    auto n = sample([](double x) { return x; }, 0.0, 0.25, 5);
    auto m = sample([](double x) { return x; }, 0.125, 0.25, 4);
    TK_CHECK_CLOSE(simpson_support(n, m, 0, 4, 0.25), 0.5, 1e-15);

    // Cubic: exact 0.25 at dx = 0.25.
    n = sample([](double x) { return x * x * x; }, 0.0, 0.25, 5);
    m = sample([](double x) { return x * x * x; }, 0.125, 0.25, 4);
    TK_CHECK_CLOSE(simpson_support(n, m, 0, 4, 0.25), 0.25, 1e-15);
}

TK_TEST(polynomial_exactness_random) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const double dx = 0.37;
    const std::size_t n = 16;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> c3(4), c4(5);
        for (auto& v : c3) v = coef(rng);
        for (auto& v : c4) v = coef(rng);

        std::vector<double> nodes(n), mids(n - 1), f4(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = dx * static_cast<double>(i);
            nodes[i] = poly(c3, x);
            f4[i] = poly(c4, x);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) mids[i] = poly(c3, dx * (static_cast<double>(i) + 0.5));

        // Interpolation exact for degree <= 3 (interior points).
        auto im = interp_node_to_mid(nodes);
        for (std::size_t i = 1; i + 1 < im.size(); ++i)
            TK_CHECK_CLOSE(im[i], mids[i], 1e-12);

        // First derivative, same family: exact for degree <= 4.
        auto d1 = d1_same_parity(f4, dx, Ghost::even_mid);
        for (std::size_t i = 2; i + 2 < n; ++i)
            TK_CHECK_CLOSE(d1[i], poly_d1(c4, dx * static_cast<double>(i)), 1e-11);

        // First derivative, cross family: exact for degree <= 3.
        auto dc = d1_node_to_mid(nodes, dx);
        for (std::size_t i = 1; i + 1 < dc.size(); ++i)
            TK_CHECK_CLOSE(dc[i], poly_d1(c3, dx * (static_cast<double>(i) + 0.5)), 1e-11);

        // Second derivative: exact for degree <= 4.
        auto d2 = d2_same_parity(f4, dx, Ghost::even_mid);
        for (std::size_t i = 2; i + 2 < n; ++i)
            TK_CHECK_CLOSE(d2[i], poly_d2(c4, dx * static_cast<double>(i)), 1e-10);

        // Third derivative: exact for degree <= 3.
        auto d3 = d3_same_parity(nodes, dx, Ghost::even_mid);
        for (std::size_t i = 3; i + 3 < n; ++i)
            TK_CHECK_CLOSE(d3[i], poly_d3(c3, dx * static_cast<double>(i)), 1e-10);

        // Simpson: exact for degree <= 3.
        TK_CHECK_CLOSE(simpson_support(nodes, mids, 0, n - 1, dx),
                       poly_int(c3, 0.0, dx * static_cast<double>(n - 1)), 1e-11);
    }
}

TK_TEST(order_of_accuracy_on_sine) {
    // Wall-compatible fields: cos(kx) on nodes (even at both walls),
    // sin(kx) on midpoints (odd). Measured slopes must be >= 3.7.
    const double length = M_PI;  // walls at 0 and pi
    const double k = 3.0;        // cos(3x) has zero slope at 0 and pi; sin(3x) vanishes

    auto run = [&](int which, double dx) -> double {
        const std::size_t n = static_cast<std::size_t>(std::lround(length / dx)) + 1;
        std::vector<double> nodes(n), mids(n - 1);
        for (std::size_t i = 0; i < n; ++i) nodes[i] = std::cos(k * dx * static_cast<double>(i));
        for (std::size_t i = 0; i + 1 < n; ++i)
            mids[i] = std::sin(k * dx * (static_cast<double>(i) + 0.5));
        double err = 0.0;
        auto note = [&](double got, double want) { err = std::max(err, std::abs(got - want)); };
        switch (which) {
            case 0: {  // node -> mid interpolation
                auto v = interp_node_to_mid(nodes, Ghost::even_node);
                for (std::size_t i = 0; i < v.size(); ++i)
                    note(v[i], std::cos(k * dx * (static_cast<double>(i) + 0.5)));
                break;
            }
            case 1: {  // d1 same family (midpoint field)
                auto v = d1_same_parity(mids, dx, Ghost::odd_mid);
                for (std::size_t i = 0; i < v.size(); ++i)
                    note(v[i], k * std::cos(k * dx * (static_cast<double>(i) + 0.5)));
                break;
            }
            case 2: {  // d1 cross family (node field onto midpoints)
                auto v = d1_node_to_mid(nodes, dx, Ghost::even_node);
                for (std::size_t i = 0; i < v.size(); ++i)
                    note(v[i], -k * std::sin(k * dx * (static_cast<double>(i) + 0.5)));
                break;
            }
            case 3: {  // d2 same family (midpoint field)
                auto v = d2_same_parity(mids, dx, Ghost::odd_mid);
                for (std::size_t i = 0; i < v.size(); ++i)
                    note(v[i], -k * k * std::sin(k * dx * (static_cast<double>(i) + 0.5)));
                break;
            }
            case 4: {  // d3 same family (midpoint field)
                auto v = d3_same_parity(mids, dx, Ghost::odd_mid);
                for (std::size_t i = 0; i < v.size(); ++i)
                    note(v[i], -k * k * k * std::cos(k * dx * (static_cast<double>(i) + 0.5)));
                break;
            }
            case 5: {  // Simpson over [0, 1] on x^5 (exact integral 1/6)
                const double hx = dx / length;  // reuse the ladder scaling
                const std::size_t nn = static_cast<std::size_t>(std::lround(1.0 / hx)) + 1;
                std::vector<double> fn(nn), fm(nn - 1);
                for (std::size_t i = 0; i < nn; ++i) fn[i] = std::pow(hx * static_cast<double>(i), 5);
                for (std::size_t i = 0; i + 1 < nn; ++i)
                    fm[i] = std::pow(hx * (static_cast<double>(i) + 0.5), 5);
                note(simpson_support(fn, fm, 0, nn - 1, hx), 1.0 / 6.0);
                break;
            }
        }
        return err;
    };

    for (int which = 0; which <= 5; ++which) {
        std::vector<double> hs, errs;
        for (double dx : {length / 64.0, length / 128.0, length / 256.0, length / 512.0}) {
            hs.push_back(dx);
            errs.push_back(run(which, dx));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const double x = std::log(hs[i]), y = std::log(errs[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double nn = static_cast<double>(hs.size());
        const double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
        TK_CHECK(slope >= 3.7);
    }
}

TK_TEST(linearity_of_operators) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = 24;
    const double dx = 0.11, a = 1.7, b = -0.6;
    std::vector<double> f(n), g(n), combo(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = u(rng);
        g[i] = u(rng);
        combo[i] = a * f[i] + b * g[i];
    }
    auto lhs = d1_same_parity(combo, dx, Ghost::even_mid);
    auto rf = d1_same_parity(f, dx, Ghost::even_mid);
    auto rg = d1_same_parity(g, dx, Ghost::even_mid);
    for (std::size_t i = 0; i < n; ++i) TK_CHECK_CLOSE(lhs[i], a * rf[i] + b * rg[i], 1e-10);

    auto li = interp_node_to_mid(combo, Ghost::even_node);
    auto fi = interp_node_to_mid(f, Ghost::even_node);
    auto gi = interp_node_to_mid(g, Ghost::even_node);
    for (std::size_t i = 0; i < li.size(); ++i) TK_CHECK_CLOSE(li[i], a * fi[i] + b * gi[i], 1e-10);
}

TK_MAIN()
