#include <gtest/gtest.h>

#include <cmath>

#include <gen.hpp>
#include <pdmosc/coherent.hpp>
#include <pdmosc/errors.hpp>
#include <pdmosc/spectrum.hpp>

using namespace pdmosc;
using pdmosc::testing::Gen;

TEST(PropCoherent, GupIdentityFromClosedForms)
{
    Gen gen(41);
    int checked = 0;
    for (int k = 0; k < 500; ++k) {
        const auto p = gen.params(0.0, 0.8);
        const cplx a = gen.complex_in(2.0);
        if (p.deformed() && !(coherent_lambda(p, a) > 0.0))
            continue;
        const auto m = coherent_moments(CoherentState(p, a));
        const double lhs = (m.ex2 - m.ex * m.ex) * (m.epi2 - m.epi * m.epi);
        const double rhs = 0.25 * p.hbar() * p.hbar() * std::pow(1.0 + p.gamma() * m.ex, 2);
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-10);
        ++checked;
    }
    EXPECT_GT(checked, 300);
}

TEST(PropCoherent, ModulusPreservedByEvolution)
{
    Gen gen(42);
    for (int k = 0; k < 30; ++k) {
        const auto p = gen.params(0.0, 0.6);
        const double r = gen.uniform(0.0, 0.9) * coherent_amplitude_factor(p) /
                         std::max(1e-12, std::sqrt(2.0) * p.gtilde());
        const double r_use = std::min(r, 3.0);
        const cplx a = std::polar(r_use, gen.uniform(-M_PI, M_PI));
        if (p.deformed() && !(coherent_lambda(p, a) > 0.0))
            continue;
        const CoherentState s(p, a);
        const double om = coherent_frequency(p, r_use);
        for (int i = 0; i < 30; ++i) {
            const double t = gen.uniform(0.0, 3.0) * 2.0 * M_PI / om;
            EXPECT_NEAR(std::abs(evolved_alpha(s, t)), r_use, 1e-14 * std::max(1.0, r_use));
        }
        EXPECT_NEAR(std::abs(evolved_alpha(s, 0.0) - a), 0.0, 1e-13);
    }
}

TEST(PropCoherent, UncertaintySeriesPeriodic)
{
    Gen gen(43);
    for (int k = 0; k < 10; ++k) {
        const auto p = gen.params(0.05, 0.6, true);
        const double r = gen.uniform(0.1, 0.7) * coherent_amplitude_factor(p) / (std::sqrt(2.0) * p.gtilde());
        const double T = 2.0 * M_PI / coherent_frequency(p, r);
        const double t0 = gen.uniform(0.0, T);
        try {
            const auto a = uncertainty_timeseries(p, r, {t0, t0 + T, 17});
            const auto b = uncertainty_timeseries(p, r, {t0 + T, t0 + 2.0 * T, 17});
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (std::isnan(a[i].dxdp))
                    continue;
                EXPECT_NEAR(a[i].dxdp, b[i].dxdp, 1e-8);
                EXPECT_NEAR(a[i].gup_ratio, 1.0, 1e-10);
            }
        } catch (const DomainError&) {
        }
    }
}

TEST(PropCoherent, NormalizationRandomLabels)
{
    Gen gen(44);
    for (int k = 0; k < 20; ++k) {
        const auto p = gen.params(0.05, 0.7);
        const cplx a = gen.complex_in(1.2);
        if (!(coherent_lambda(p, a) > 0.5))
            continue;
        const CoherentState s(p, a);
        const double v = integrate_full(p, s.lambda_cs(), [&](double x) { return std::norm(coherent_wavefunction(s, x)); });
        EXPECT_NEAR(v, 1.0, 1e-9);
    }
}
