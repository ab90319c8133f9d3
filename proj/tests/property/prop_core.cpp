#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include <gen.hpp>
#include <pdmosc/errors.hpp>
#include <pdmosc/quadrature.hpp>
#include <pdmosc/special.hpp>
#include <pdmosc/tridiag.hpp>

using namespace pdmosc;
using pdmosc::testing::Gen;

TEST(PropCore, LaguerreDerivativeRecurrence)
{
    Gen gen(1);
    for (int i = 0; i < 100; ++i) {
        const int n = gen.integer(1, 10);
        const double nu = gen.uniform(0.5, 30.0);
        const double z = gen.uniform(1e-3, 50.0);
        const double d = assoc_laguerre_derivative(n, nu, z);
        const double ln = assoc_laguerre(n, nu, z), lm = assoc_laguerre(n - 1, nu, z);
        const double rhs = n * ln - (n + nu) * lm;
        const double scale = std::max({1.0, std::abs(n * ln), std::abs((n + nu) * lm)});
        EXPECT_LT(std::abs(z * d - rhs) / scale, 1e-12) << n << " " << nu << " " << z;
        // central difference, judged against the size of the terms it cancels
        const double h = 1e-5 * std::max(1.0, z);
        const double fd = (assoc_laguerre(n, nu, z + h) - assoc_laguerre(n, nu, z - h)) / (2.0 * h);
        EXPECT_LT(std::abs(fd - d) / std::max({1.0, std::abs(d), std::abs(ln)}), 1e-6) << n << " " << nu << " " << z;
    }
}

TEST(PropCore, OddIntegrandVanishes)
{
    Gen gen(2);
    for (int i = 0; i < 50; ++i) {
        const double c = gen.uniform(-5.0, 5.0);
        const double w = gen.uniform(0.1, 4.0);
        const double a = gen.uniform(0.1, 3.0);
        const int panels = gen.integer(1, 9);
        auto f = [&](double x) { return (x - c) * std::exp(-a * (x - c) * (x - c)) + std::pow(x - c, 3); };
        EXPECT_LE(std::abs(quadrature(f, c - w, c + w, panels)), 1e-14 * std::max(1.0, std::pow(w, 4)));
    }
}

TEST(PropCore, TridiagReversalInvariant)
{
    Gen gen(3);
    for (int i = 0; i < 20; ++i) {
        const int n = gen.integer(5, 300);
        std::vector<double> d(n), o(n - 1);
        for (auto& v : d)
            v = gen.uniform(-3.0, 10.0);
        for (auto& v : o)
            v = gen.uniform(-2.0, 2.0);
        const std::size_t k = static_cast<std::size_t>(gen.integer(1, std::min(n, 8)));
        const auto a = tridiag_lowest_eigen(d, o, k);
        std::reverse(d.begin(), d.end());
        std::reverse(o.begin(), o.end());
        const auto b = tridiag_lowest_eigen(d, o, k);
        for (std::size_t j = 0; j < k; ++j)
            EXPECT_NEAR(a[j], b[j], 1e-12 * std::max(1.0, std::abs(a[j])));
        EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    }
}

TEST(PropCore, LnGammaRecurrence)
{
    Gen gen(4);
    for (int i = 0; i < 200; ++i) {
        const double x = std::exp(gen.uniform(std::log(1e-3), std::log(1e5)));
        EXPECT_NEAR(ln_gamma(x + 1.0) - ln_gamma(x), std::log(x), 1e-12 * std::max(1.0, std::abs(ln_gamma(x + 1.0))));
    }
}

TEST(PropCore, CoordinateRoundTrips)
{
    Gen gen(5);
    for (int i = 0; i < 200; ++i) {
        const auto p = gen.params(0.01, 1.3);
        const double x = p.left_edge() * gen.uniform(-3.0, 0.999);
        EXPECT_NEAR(p.xgamma_to_x(p.x_to_xgamma(x)), x, 1e-12 * std::max(1.0, std::abs(x / p.sigma0())) * p.sigma0());
        EXPECT_NEAR(p.z_to_x(p.x_to_z(x)), x, 1e-11 * std::max(1.0, std::abs(x / p.sigma0())) * p.sigma0());
    }
}
