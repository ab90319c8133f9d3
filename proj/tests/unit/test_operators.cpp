#include <gtest/gtest.h>

#include <cmath>

#include <pdmosc/errors.hpp>
#include <pdmosc/operators.hpp>
#include <pdmosc/spectrum.hpp>

using namespace pdmosc;

namespace {
double rel_l2(const ModelParams& p, const WaveFn& a, const WaveFn& b)
{
    return l2_norm(p, a - b) / l2_norm(p, b);
}

WaveFn bump(const ModelParams& p, const Grid& g)
{
    return sample(p, g, [](double x) { return cplx(1.0 + 0.3 * x, 0.2 * x * x) * std::exp(-x * x); });
}
} // namespace

TEST(Operators, CanonicalCommutator)
{
    const auto p = ModelParams::natural(0.4);
    const auto g = Grid::uniform(Coordinate::XGamma, -8.0, 8.0, 3201);
    const auto f = bump(p, g);
    const auto c = position(p, pseudo_momentum(p, f)) - pseudo_momentum(p, position(p, f));
    const auto expect = cplx(0.0, p.hbar()) * multiply(p, f, [&](double x) { return 1.0 + p.gamma() * x; });
    EXPECT_LT(rel_l2(p, c, expect), 1e-7);

    const auto xg = multiply(p, f, [&](double x) { return p.x_to_xgamma(x); });
    const auto c2 = multiply(p, pseudo_momentum(p, f), [&](double x) { return p.x_to_xgamma(x); }) -
                    pseudo_momentum(p, xg);
    EXPECT_LT(rel_l2(p, c2, cplx(0.0, p.hbar()) * f), 1e-7);
}

TEST(Operators, DerivativeConsistentAcrossCoordinates)
{
    const auto p = ModelParams::natural(0.3);
    auto fx = [](double x) { return std::exp(-0.5 * (x - 0.4) * (x - 0.4)); };
    auto dfx = [&](double x) { return (1.0 + 0.3 * x) * -(x - 0.4) * fx(x); };
    for (auto coord : {Coordinate::X, Coordinate::XGamma}) {
        const auto g = Grid::uniform(coord, -3.0, 5.0, 1601);
        const auto d = deformed_derivative(p, sample(p, g, fx));
        const auto e = sample(p, g, dfx);
        EXPECT_LT(rel_l2(p, d, e), 1e-8);
    }
    const auto gz = Grid::uniform(Coordinate::Z, p.x_to_z(-3.0), p.x_to_z(5.0), 1601);
    const auto d = deformed_derivative(p, sample(p, gz, fx));
    const auto e = sample(p, gz, dfx);
    EXPECT_LT(rel_l2(p, d, e), 1e-8);
}

TEST(Operators, HamiltonianOnEigenstates)
{
    const auto p = ModelParams::natural(0.4);
    const auto g = resolved_grid(p, nu(p, 3));
    for (int n = 0; n <= 3; ++n) {
        const auto psi = sample(p, g, [&](double x) { return eigenfunction(p, n, x); });
        EXPECT_LT(rel_l2(p, hamiltonian(p, psi), energy(p, n) * psi), 1e-6) << n;
    }
}

TEST(Operators, PseudoMomentumHermitian)
{
    const auto p = ModelParams::natural(0.4);
    const auto g = Grid::uniform(Coordinate::XGamma, -10.0, 8.0, 3601);
    const auto f = bump(p, g);
    const auto h = sample(p, g, [](double x) { return cplx(std::exp(-(x - 0.5) * (x - 0.5)), 0.0); });
    EXPECT_NEAR(std::abs(inner_product(p, f, pseudo_momentum(p, h)) -
                         inner_product(p, pseudo_momentum(p, f), h)),
                0.0, 1e-8);
    // P mixes a multiplication into the stencil, so symmetry only holds to O(h^2)
    EXPECT_NEAR(std::abs(inner_product(p, f, momentum(p, h)) - inner_product(p, momentum(p, f), h)), 0.0,
                2e-6);
}

TEST(Operators, ConventionChecks)
{
    const auto p = ModelParams::natural(0.4);
    const auto g = default_grid(p, 401);
    const auto phi = to_phi(p, bump(p, g));
    EXPECT_THROW(pseudo_momentum(p, phi), ConventionError);
    EXPECT_THROW(hamiltonian(p, phi), ConventionError);
    EXPECT_THROW(deformed_schroedinger(p, bump(p, g)), ConventionError);
    const auto tiny = sample(p, Grid::uniform(Coordinate::X, 0.0, 1.0, 10), [](double) { return 1.0; });
    EXPECT_THROW(deformed_derivative(p, tiny), GridError);
}
