#include <gtest/gtest.h>

#include <cmath>

#include <pdmosc/classical.hpp>
#include <pdmosc/errors.hpp>

using namespace pdmosc;

TEST(Classical, OrbitFrequency)
{
    EXPECT_DOUBLE_EQ(orbit_frequency(ModelParams::natural(0.0), 3.0), 1.0);
    EXPECT_NEAR(orbit_frequency(ModelParams::natural(0.8), 1.0), 0.6, 1e-15);
    EXPECT_NEAR(orbit_frequency(ModelParams::natural(0.4), 1.0), 0.916515138991168, 1e-15);
    EXPECT_THROW(orbit_frequency(ModelParams::natural(1.0), 1.0), RegimeError);
    EXPECT_THROW(ClassicalOrbit(ModelParams::natural(0.5), 2.5), RegimeError);
}

TEST(Classical, DeformedPhaseExamples)
{
    const ClassicalOrbit flat(ModelParams::natural(0.0), 1.0);
    EXPECT_NEAR(deformed_phase(flat, 1.3), 1.3, 1e-15);
    const ClassicalOrbit o(ModelParams::natural(0.8), 1.0, 0.7);
    EXPECT_EQ(deformed_phase(o, 0.7), 0.0);
    const double h = 1e-5;
    const double rate = (deformed_phase(o, 0.7 + h) - deformed_phase(o, 0.7 - h)) / (2.0 * h);
    EXPECT_NEAR(rate, 1.8, 1e-8);
}

TEST(Classical, PhaseIsContinuousAndSolvesOde)
{
    const ClassicalOrbit o(ModelParams::natural(0.8), 1.0);
    double prev = deformed_phase(o, 0.0);
    const double h = 1e-5;
    for (int i = 1; i <= 3000; ++i) {
        const double t = 0.01 * i;
        const double th = deformed_phase(o, t);
        EXPECT_GT(th, prev);
        EXPECT_LT(th - prev, 0.1);
        prev = th;
        const double rate = (deformed_phase(o, t + h) - deformed_phase(o, t - h)) / (2.0 * h);
        EXPECT_NEAR(rate, 1.0 + 0.8 * std::cos(th), 1e-8) << t;
    }
}

TEST(Classical, TrajectoryExamples)
{
    const ClassicalOrbit o(ModelParams::natural(0.4), 1.0);
    const auto a = trajectory(o, 0.0);
    EXPECT_DOUBLE_EQ(a.x, 1.0);
    EXPECT_EQ(a.p, 0.0);
    EXPECT_EQ(a.pi_gamma, 0.0);
    // theta = pi at half period
    const auto b = trajectory(o, 0.5 * o.period());
    EXPECT_NEAR(b.x, -1.0, 1e-14);
    EXPECT_NEAR(b.pi_gamma, 0.0, 1e-14);
    EXPECT_NEAR(b.p, 0.0, 1e-14);

    const ClassicalOrbit flat(ModelParams::natural(0.0), 2.0);
    const auto c = trajectory(flat, 0.5 * M_PI);
    EXPECT_NEAR(c.x, 0.0, 1e-15);
    EXPECT_NEAR(c.pi_gamma, -2.0, 1e-15);
    EXPECT_NEAR(c.p, -2.0, 1e-15);
}

TEST(Classical, Energy)
{
    EXPECT_EQ(classical_energy(ModelParams::natural(0.4), {0.0, 0.0}), 0.0);
    EXPECT_DOUBLE_EQ(classical_energy(ModelParams::natural(0.0), {1.5, 0.0}), 1.125);
    EXPECT_DOUBLE_EQ(classical_energy(ModelParams::natural(0.4), {1.0, 0.0}), 0.5);
    const ModelParams p(2.0, 0.5, 1.0, 0.3);
    const ClassicalOrbit o(p, 1.1);
    const double e = 0.5 * p.m0() * p.omega0() * p.omega0() * 1.1 * 1.1;
    for (double t : {0.0, 1.0, 7.3, 20.0}) {
        const auto s = trajectory(o, t);
        EXPECT_NEAR(classical_energy(p, {s.x, s.p}) / e, 1.0, 1e-12);
    }
}

TEST(Classical, CanonicalMap)
{
    const auto p = ModelParams::natural(0.5);
    const auto q = canonical_map(p, {2.0, 0.75});
    EXPECT_NEAR(q.x_gamma, 2.0 * std::log(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(q.pi_gamma, 1.5);
    EXPECT_EQ(canonical_map(p, {0.0, 3.0}).x_gamma, 0.0);
    EXPECT_EQ(canonical_map(p, {0.0, 3.0}).pi_gamma, 3.0);
    const auto flat = canonical_map(ModelParams::natural(0.0), {1.2, -0.4});
    EXPECT_EQ(flat.x_gamma, 1.2);
    EXPECT_EQ(flat.pi_gamma, -0.4);
    const auto back = canonical_map_inverse(p, q);
    EXPECT_NEAR(back.x, 2.0, 1e-14);
    EXPECT_NEAR(back.p, 0.75, 1e-14);
    EXPECT_THROW(canonical_map(p, {-2.0, 0.0}), DomainError);
}

TEST(Classical, MorseParams)
{
    const auto m = morse_params(ModelParams::natural(0.4));
    EXPECT_DOUBLE_EQ(m.W_gamma, 3.125);
    EXPECT_DOUBLE_EQ(m.kappa_gamma, -0.4);
    ASSERT_TRUE(m.has_shifted);
    EXPECT_NEAR(m.omega_small, 0.84, 1e-15);
    EXPECT_NEAR(m.delta_gamma, -0.4358834678619445, 1e-14);
    EXPECT_THROW(morse_params(ModelParams::natural(0.0)), DomainError);
    EXPECT_FALSE(morse_params(ModelParams::natural(1.2)).has_shifted);
}

TEST(Classical, EquationsOfMotionCarryOmega0)
{
    // omega0 != 1 so a missing omega0 factor would show up.
    const ModelParams p(1.3, 2.0, 0.7, 0.25);
    const ClassicalOrbit o(p, 1.2);
    const double h = 1e-5;
    for (int i = 0; i < 40; ++i) {
        const double t = 0.073 * i;
        const auto s = trajectory(o, t);
        const auto sp = trajectory(o, t + h);
        const auto sm = trajectory(o, t - h);
        const double j = 1.0 + p.gamma() * s.x;
        const double dx = (sp.x - sm.x) / (2.0 * h) / j;
        const double dpi = (sp.pi_gamma - sm.pi_gamma) / (2.0 * h) / j;
        EXPECT_NEAR(dx, s.pi_gamma / p.m0(), 1e-6);
        EXPECT_NEAR(dpi, -p.m0() * p.omega0() * p.omega0() * s.x, 1e-6);
    }
}

TEST(Classical, ClassicalAlpha)
{
    const auto p = ModelParams::natural(0.3);
    const auto [re, im] = classical_alpha(p, {1.0, 2.0});
    EXPECT_NEAR(re, 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(im, 1.3 * 2.0 / std::sqrt(2.0), 1e-15);
}

TEST(Classical, Rk4Examples)
{
    const auto flat = ModelParams::natural(0.0);
    const auto r = rk4_oracle(flat, {1.0, 0.0}, flat.tau0(), flat.tau0() / 2000.0);
    for (const auto& [t, s] : r)
        EXPECT_NEAR(s.x, std::cos(t), 1e-8);
    EXPECT_NEAR(r.back().first, flat.tau0(), 1e-12);

    const auto z = rk4_oracle(flat, {0.3, 0.1}, 0.0, 0.01);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0].first, 0.0);
    EXPECT_EQ(z[0].second.x, 0.3);

    EXPECT_THROW(rk4_oracle(flat, {0.0, 0.0}, 1.0, 0.0), DomainError);
}

TEST(Classical, Rk4MatchesClosedForm)
{
    const auto p = ModelParams::natural(0.4);
    const ClassicalOrbit o(p, 1.0);
    const double tau = p.tau0();
    const auto r = rk4_oracle(p, {1.0, 0.0}, 3.0 * tau, tau / 2000.0);
    double worst = 0.0;
    for (const auto& [t, s] : r)
        worst = std::max(worst, std::abs(s.x - trajectory(o, t).x));
    EXPECT_LT(worst, 1e-6);
}

TEST(Classical, Rk4StaysInsideDomain)
{
    // large energy pushes towards x = -1/gamma, approached only asymptotically
    const auto p = ModelParams::natural(0.9);
    for (const auto& [t, s] : rk4_oracle(p, {0.0, -3.0}, 10.0, 1e-3))
        EXPECT_GT(1.0 + p.gamma() * s.x, 0.0) << t;
    EXPECT_THROW(rk4_oracle(p, {-2.0, 0.0}, 1.0, 1e-3), DomainError);
}
