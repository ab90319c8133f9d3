#pragma once

#include "pdmosc/grid.hpp"

namespace pdmosc {

// All operators act on Psi-convention functions unless stated.

// D_gamma f = (1+gamma x) df/dx, whatever the grid coordinate. Any convention.
WaveFn deformed_derivative(const ModelParams& p, const WaveFn& f);

// Pi_gamma = sqrt(1+gamma x) p sqrt(1+gamma x) = -i hbar (D_gamma + gamma/2).
WaveFn pseudo_momentum(const ModelParams& p, const WaveFn& f);

// p = -i hbar d/dx.
WaveFn momentum(const ModelParams& p, const WaveFn& f);

// Multiplication by x.
WaveFn position(const ModelParams& p, const WaveFn& f);

// Multiplication by an arbitrary function of x.
template <class F>
WaveFn multiply(const ModelParams& p, const WaveFn& f, F&& g)
{
    const auto xs = f.grid.x_values(p);
    WaveFn out = f;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.values[i] *= g(xs[i]);
    return out;
}

// H = Pi^2/2m0 + m0 omega0^2 x^2/2.
WaveFn hamiltonian(const ModelParams& p, const WaveFn& f);

// Deformed Schroedinger operator on a Phi-convention function:
// -(hbar^2/2m0) D^2 phi + V phi.
WaveFn deformed_schroedinger(const ModelParams& p, const WaveFn& phi);

} // namespace pdmosc
