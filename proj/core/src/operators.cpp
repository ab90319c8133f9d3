#include "pdmosc/operators.hpp"

#include "pdmosc/errors.hpp"

namespace pdmosc {

namespace {
void require_psi(const WaveFn& f, const char* op)
{
    if (f.convention != Convention::Psi)
        throw ConventionError(std::string(op) + " expects a Psi-convention function");
}
} // namespace

WaveFn deformed_derivative(const ModelParams& p, const WaveFn& f)
{
    require_min_points(f.grid);
    WaveFn out(f.grid, grid_derivative(f.grid, f.values), f.convention);
    const auto& u = f.grid.points();
    switch (f.grid.coordinate()) {
    case Coordinate::XGamma:
        break;
    case Coordinate::X: {
        const auto js = f.grid.jacobian_values(p);
        for (std::size_t i = 0; i < u.size(); ++i)
            out.values[i] *= js[i];
        break;
    }
    case Coordinate::Z:
        for (std::size_t i = 0; i < u.size(); ++i)
            out.values[i] *= p.gamma() * u[i];
        break;
    }
    return out;
}

WaveFn pseudo_momentum(const ModelParams& p, const WaveFn& f)
{
    require_psi(f, "pseudo_momentum");
    WaveFn out = deformed_derivative(p, f);
    const cplx k(0.0, -p.hbar());
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = k * (out.values[i] + 0.5 * p.gamma() * f.values[i]);
    return out;
}

WaveFn momentum(const ModelParams& p, const WaveFn& f)
{
    require_psi(f, "momentum");
    WaveFn out = deformed_derivative(p, f);
    const auto js = f.grid.jacobian_values(p);
    const cplx k(0.0, -p.hbar());
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] *= k / js[i];
    return out;
}

WaveFn position(const ModelParams& p, const WaveFn& f)
{
    return multiply(p, f, [](double x) { return x; });
}

WaveFn hamiltonian(const ModelParams& p, const WaveFn& f)
{
    require_psi(f, "hamiltonian");
    WaveFn out = pseudo_momentum(p, pseudo_momentum(p, f));
    out *= 1.0 / (2.0 * p.m0());
    const double k = 0.5 * p.m0() * p.omega0() * p.omega0();
    out += multiply(p, f, [k](double x) { return k * x * x; });
    return out;
}

WaveFn deformed_schroedinger(const ModelParams& p, const WaveFn& phi)
{
    if (phi.convention != Convention::Phi)
        throw ConventionError("deformed_schroedinger expects a Phi-convention function");
    WaveFn out = deformed_derivative(p, deformed_derivative(p, phi));
    out *= -p.hbar() * p.hbar() / (2.0 * p.m0());
    const double k = 0.5 * p.m0() * p.omega0() * p.omega0();
    out += multiply(p, phi, [k](double x) { return k * x * x; });
    return out;
}

} // namespace pdmosc
