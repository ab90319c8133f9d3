#pragma once

#include <string>
#include <vector>

#include "pdmosc/grid.hpp"
#include "pdmosc/spectrum_result.hpp"

namespace pdmosc {

enum class MorseVariant { Base, PartnerMinus };

struct FdConfig {
    double L_left = 8.0;   // in units of sigma0
    double L_right = 16.0;
    int n_points = 8001;
    int k_states = 1;
    // Widen L_left until every requested bound state has decayed to e^{-24} of its peak.
    // The literal spacing is kept, so n_points grows with the domain.
    bool adaptive_left = false;
    // Combine n_points and 2 n_points - 1 as (4 E_fine - E_coarse)/3.
    bool richardson = false;

    void validate() const;
    // Fixed domain [-8, 16] sigma0, 8001 points, no Richardson.
    static FdConfig literal(int k_states);
    // Literal bounds with adaptive left edge and Richardson pairs.
    static FdConfig reference(int k_states);
};

struct FdResult {
    SpectrumResult spectrum;           // bound entries only
    std::vector<double> raw_values;    // all k requested eigenvalues
    Grid grid;                         // x_gamma interior points of the finest solve
    std::vector<std::vector<double>> phi;  // eigenvectors, int phi^2 dx_gamma = 1
    double plateau;
    double L_left_used;
    std::vector<std::string> warnings;
};

FdResult solve_morse_fd(const ModelParams& p, MorseVariant variant, const FdConfig& cfg);

// psi(x) = phi(x_gamma(x))/sqrt(1+gamma x) on the FD grid, as a Psi-convention WaveFn in x_gamma.
WaveFn fd_eigenfunction(const ModelParams& p, const FdResult& r, int k);

enum class Observable { X, X2, Pi, Pi2, P, P2 };

// <psi| O |psi> in the convention's measure. For momentum observables the density
// must vanish at both grid ends; GridError otherwise.
cplx expectation_quadrature(const ModelParams& p, const WaveFn& psi, Observable o);

// Crank-Nicolson propagation of a Psi-convention state sampled on an x_gamma
// grid (Dirichlet ends), using the constant-mass Morse form of H.
WaveFn propagate_crank_nicolson(const ModelParams& p, const WaveFn& psi0, double t, int steps);

} // namespace pdmosc
