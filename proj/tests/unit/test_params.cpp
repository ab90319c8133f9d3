#include <gtest/gtest.h>

#include <cmath>

#include <pdmosc/errors.hpp>
#include <pdmosc/params.hpp>

using namespace pdmosc;

TEST(ModelParams, NaturalUnits)
{
    const auto p = ModelParams::natural(0.4);
    EXPECT_DOUBLE_EQ(p.sigma0(), 1.0);
    EXPECT_DOUBLE_EQ(p.gtilde(), 0.4);
    EXPECT_DOUBLE_EQ(p.s(), 6.25);
    EXPECT_DOUBLE_EQ(p.tau0(), 2.0 * M_PI);
}

TEST(ModelParams, SigmaIdentity)
{
    const ModelParams p(1.7, 0.3, 2.9, 0.05);
    EXPECT_NEAR(p.sigma0() * p.sigma0() * p.m0() * p.omega0() / p.hbar(), 1.0, 1e-15);
    EXPECT_NEAR(p.s() * p.gtilde() * p.gtilde(), 1.0, 1e-14);
}

TEST(ModelParams, RejectsBadInput)
{
    EXPECT_THROW(ModelParams(0.0, 1.0, 1.0, 0.1), DomainError);
    EXPECT_THROW(ModelParams(1.0, -1.0, 1.0, 0.1), DomainError);
    EXPECT_THROW(ModelParams(1.0, 1.0, 0.0, 0.1), DomainError);
    EXPECT_THROW(ModelParams(1.0, 1.0, 1.0, -0.1), DomainError);
    EXPECT_THROW(ModelParams(1.0, 1.0, 1.0, std::nan("")), DomainError);
}

TEST(ModelParams, UndeformedHasNoS)
{
    const auto p = ModelParams::natural(0.0);
    EXPECT_FALSE(p.deformed());
    EXPECT_THROW(p.s(), DomainError);
    EXPECT_THROW(p.x_to_z(0.0), DomainError);
    EXPECT_DOUBLE_EQ(p.x_to_xgamma(1.25), 1.25);
    EXPECT_TRUE(std::isinf(p.left_edge()));
}

TEST(ModelParams, CoordinateMaps)
{
    const auto p = ModelParams::natural(0.5);
    EXPECT_NEAR(p.x_to_xgamma(2.0), 2.0 * std::log(2.0), 1e-15);
    EXPECT_NEAR(p.xgamma_to_x(p.x_to_xgamma(0.37)), 0.37, 1e-15);
    EXPECT_DOUBLE_EQ(p.x_to_z(0.0), 8.0);
    EXPECT_NEAR(p.z_to_x(p.x_to_z(-1.3)), -1.3, 1e-14);
    EXPECT_DOUBLE_EQ(p.left_edge(), -2.0);
    EXPECT_THROW(p.x_to_xgamma(-2.0), DomainError);
    EXPECT_THROW(p.jacobian(-2.5), DomainError);
    EXPECT_THROW(p.z_to_x(0.0), DomainError);
}
