#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdmosc/grid.hpp"

namespace pdmosc {

enum class PartnerSide { Plus, Minus };
enum class LadderDir { Up, Down };

// a(beta) f = (1/sqrt2 sigma0) [(x + (beta+1) gamma sigma0^2/2) f + sigma0^2 D_gamma f]
WaveFn apply_annihilation(const ModelParams& p, double beta, const WaveFn& f);
// a^dagger(beta) f = (1/sqrt2 sigma0) [(x + (beta-1) gamma sigma0^2/2) f - sigma0^2 D_gamma f]
WaveFn apply_creation(const ModelParams& p, double beta, const WaveFn& f);

// Deformed bosonic operators b = (x + i sigma0^2 Pi/hbar)/(sqrt2 sigma0) and b^dagger.
WaveFn apply_b(const ModelParams& p, const WaveFn& f);
WaveFn apply_b_dagger(const ModelParams& p, const WaveFn& f);

// H_+ = hbar omega0 a^dagger a, H_- = hbar omega0 a a^dagger (beta = 1).
WaveFn partner_hamiltonian(const ModelParams& p, PartnerSide side, const WaveFn& f);

double partner_potential(const ModelParams& p, PartnerSide side, double x);
double partner_energy(const ModelParams& p, int n, PartnerSide side);
// Largest n for which psi_n^{(-)} exists (nu~_n = 2s - 2n - 3 > 0); -1 if none,
// nullopt when gamma == 0.
std::optional<int> max_partner_minus_index(const ModelParams& p);
double partner_eigenfunction_minus(const ModelParams& p, int n, double x);

struct BosonicSplit {
    WaveFn h_part;      // hbar omega0 (b^dagger b + 1/2) f
    WaveFn field_part;  // (1/2) hbar omega0 gamma x f
};
BosonicSplit bosonic_split(const ModelParams& p, const WaveFn& f);
// (hbar omega0/2) {b, b^dagger} f
WaveFn anticommutator_form(const ModelParams& p, const WaveFn& f);

// (hbar omega0 b^dagger b f_up, hbar omega0 b b^dagger f_down)
std::pair<WaveFn, WaveFn> susy_matrix_action(const ModelParams& p, const WaveFn& f_up,
                                             const WaveFn& f_down);

double remainder(const ModelParams& p, double beta);
// mu = 2s - 2n - beta must be positive for psi_{n,beta} to exist.
void require_si_level(const ModelParams& p, int n, double beta);
double si_energy(const ModelParams& p, int n, double beta);
// sum_{j=1..n} R(beta + 2(j-1))
double si_energy_telescoped(const ModelParams& p, int n, double beta);

// [n_gamma(beta)]! as the product of E_j^{(+)}(beta)/hbar omega0, j = 1..n.
double deformed_factorial(const ModelParams& p, int n, double beta);
// Same quantity through lnGamma: (n!/(2s)^n) Gamma(2s - beta)/Gamma(2s - beta - n).
double deformed_factorial_gamma(const ModelParams& p, int n, double beta);
// (n!/(2s)^n) Gamma(2s + 1 - beta - n)/Gamma(2s + 1 - beta - 2n): the squared norm of
// a^dagger(beta_1) ... a^dagger(beta_n) psi_{0, beta_{n+1}}.
double chain_factorial_gamma(const ModelParams& p, int n, double beta);
// Product of the squared coefficients along that chain.
double chain_factorial(const ModelParams& p, int n, double beta);

double si_eigenfunction(const ModelParams& p, int n, double beta, double x);
double si_eigenfunction_derivative(const ModelParams& p, int n, double beta, double x);

double ladder_coefficient(const ModelParams& p, int n, double beta, LadderDir dir);

// L_+ = a^dagger(beta) Lambda(beta), L_- = Lambda^dagger(beta) a(beta) applied to psi_{n,beta}.
// Lambda shifts the state label beta -> beta + 2, realized by re-evaluating the
// closed form. For DOWN the finite-difference result a(beta) psi_{n,beta} is
// projected on psi_{n-1,beta+2} and relabelled.
WaveFn apply_ladder(const ModelParams& p, const Grid& g, int n, double beta, LadderDir dir);
// The long explicit expression for L_{+/-} psi_{n,beta}, evaluated pointwise
// with the analytic derivative.
double apply_ladder_explicit(const ModelParams& p, int n, double beta, LadderDir dir, double x);

struct Su11Report {
    bool skipped = false;
    int n_max_test = 0;
    // max |([L-,L+] - 2 L0)_{mn}|
    double l_commutator_residual = 0.0;
    // With M0 = -2s L0, [M+,M-] = 2 M0 and [M0,M+-] = +-M+-.
    double m_commutator_residual = 0.0;
    double m0_plus_residual = 0.0;
    double m0_minus_residual = 0.0;
    // Same relations with M0 = +2s L0 (informational).
    double m_commutator_residual_plus_sign = 0.0;
    double m0_plus_residual_plus_sign = 0.0;
    double m0_minus_residual_plus_sign = 0.0;
    // max deviation of the quadrature matrix elements from the coefficient form
    double coefficient_residual = 0.0;
    std::vector<double> l0;
};
Su11Report su11_check(const ModelParams& p, int n_max_test);

} // namespace pdmosc
