#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "pdmosc/params.hpp"
#include "pdmosc/spectrum_result.hpp"

namespace pdmosc {

// Largest bound n; nullopt when gamma == 0 (infinitely many levels).
// Throws NoBoundStateError when s <= 1/2.
std::optional<int> max_bound_index(const ModelParams& p);
void require_bound(const ModelParams& p, int n);

double nu(const ModelParams& p, int n);
double energy(const ModelParams& p, int n);
SpectrumResult analytic_spectrum(const ModelParams& p, int n_max);

// Normalized Morse-type state
//   (-1)^n sqrt(mu gamma n!/Gamma(mu+n+1)) sqrt(2s) e^{-z/2} z^{(mu-1)/2} L_n^{(mu)}(z)
// and its x-derivative. Zero for x <= -1/gamma. Requires gamma > 0, mu > 0.
double morse_state(const ModelParams& p, int n, double mu, double x);
double morse_state_derivative(const ModelParams& p, int n, double mu, double x);

double eigenfunction(const ModelParams& p, int n, double x);
double eigenfunction_derivative(const ModelParams& p, int n, double x);

double ground_density_lambda(const ModelParams& p);
double ground_density(const ModelParams& p, double x);

struct Moments {
    double ex;
    double ex2;
    double epi;
    double epi2;
};

Moments moments(const ModelParams& p, int n);
double uncertainty_product(const ModelParams& p, int n);
double number_expectation(const ModelParams& p, int n);

// Integral over the whole domain of f(x) dx for integrands concentrated like
// a Gamma density of shape `lambda` in z (Hermite-like Gaussian when gamma == 0).
// z-space graded Gauss-Legendre with the tail cut at z_peak + 40 sqrt(lambda).
// For lambda < 1 the end point z = 0 is handled by z = z_peak u^(1/lambda).
double integrate_full(const ModelParams& p, double lambda, const std::function<double(double)>& f);
std::complex<double> integrate_full_complex(const ModelParams& p, double lambda,
                                            const std::function<std::complex<double>(double)>& f);

// Number of sign changes of psi_n on a fine grid over the support.
int node_count(const ModelParams& p, int n);

} // namespace pdmosc
