#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include <pdmosc/quadrature.hpp>
#include <pdmosc/spectrum.hpp>

using namespace pdmosc;

TEST(Quadrature, Elementary)
{
    EXPECT_NEAR(quadrature([](double x) { return x; }, 0.0, 1.0, 1), 0.5, 1e-15);
    EXPECT_NEAR(quadrature([](double x) { return std::sin(x); }, 0.0, M_PI, 4), 2.0, 1e-14);
    const auto c = quadrature([](double x) { return std::complex<double>(x * x, -x); }, 0.0, 3.0, 3);
    EXPECT_NEAR(c.real(), 9.0, 1e-13);
    EXPECT_NEAR(c.imag(), -4.5, 1e-13);
}

TEST(Quadrature, Domain)
{
    auto f = [](double x) { return x; };
    EXPECT_THROW(quadrature(f, 1.0, 1.0, 2), DomainError);
    EXPECT_THROW(quadrature(f, 2.0, 1.0, 2), DomainError);
    EXPECT_THROW(quadrature(f, 0.0, 1.0, 0), DomainError);
}

TEST(Quadrature, GradedHandlesEndpointSingularity)
{
    // int_0^1 x^{-1/2} dx = 2
    const double v = quadrature_graded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 4, 60);
    EXPECT_NEAR(v, 2.0, 1e-8);
}

TEST(Quadrature, GroundDensityNormalized)
{
    const auto p = ModelParams::natural(0.4);
    const double lam = ground_density_lambda(p);
    const double zmax = (lam - 1.0) + 40.0 * std::sqrt(lam);
    const double xmax = p.z_to_x(zmax);
    const double v = quadrature_graded([&](double x) { return ground_density(p, x); }, p.left_edge(), xmax, 64);
    EXPECT_NEAR(v, 1.0, 1e-10);
}
