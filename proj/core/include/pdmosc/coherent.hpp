#pragma once

#include <complex>
#include <vector>

#include "pdmosc/grid.hpp"

namespace pdmosc {

class CoherentState {
public:
    // Throws DomainError unless lambda_cs > 0.
    CoherentState(const ModelParams& params, cplx alpha);

    const ModelParams& params() const { return params_; }
    cplx alpha() const { return alpha_; }
    // Meaningless (and unused) when gamma == 0.
    double lambda_cs() const;
    double amplitude() const;

private:
    ModelParams params_;
    cplx alpha_;
};

double coherent_lambda(const ModelParams& p, cplx alpha);

cplx coherent_wavefunction(const CoherentState& s, double x);
// exp(sqrt2 alpha x_gamma/sigma0) psi_0(x), not normalized.
cplx perelomov_wavefunction(const CoherentState& s, double x);

struct CoherentMoments {
    double ex;
    double ex2;
    double epi;
    double epi2;
};
CoherentMoments coherent_moments(const CoherentState& s);

struct PMoments {
    double ep;
    double ep2;
};
// Throws DomainError when a denominator is not positive.
PMoments coherent_p_moments(const CoherentState& s);

double coherent_amplitude_factor(const ModelParams& p);  // 1 - gamma^2 sigma0^2/2
double coherent_frequency(const ModelParams& p, double alpha_abs);
double coherent_phase(const ModelParams& p, double alpha_abs, double t, double t0 = 0.0);

struct EvolutionConfig {
    double t0 = 0.0;
    double t_end = 1.0;
    int samples = 2;

    void validate() const;
    double time(int i) const;
};

struct EvolutionSample {
    double t;
    CoherentState state;
    double global_phase;
};

// alpha(t) = |alpha| e^{-i Theta(t + shift)}, where the shift places alpha0 on the orbit.
std::vector<EvolutionSample> evolve(const CoherentState& s0, const EvolutionConfig& cfg);
cplx evolved_alpha(const CoherentState& s0, double t, double t0 = 0.0);

struct ExpectedTrajectory {
    double ex;
    double epi;
    double ep;
};
ExpectedTrajectory expected_trajectory(const ModelParams& p, double alpha_abs, double t,
                                       double t0 = 0.0);

// rows = time samples, columns = grid points
std::vector<std::vector<double>> density_evolution(const CoherentState& s0,
                                                   const EvolutionConfig& cfg, const Grid& grid);

struct GupCell {
    double re;
    double im;
    bool valid;
    double dx;
    double dp;
    double dxdp;
    double dpi;
    double dxdpi;
    double gup_bound;  // (hbar/2)(1 + gamma <x>)
};
std::vector<GupCell> gup_surface(const ModelParams& p, double re_lo, double re_hi, double im_lo,
                                 double im_hi, int resolution);

struct UncertaintySample {
    double t;
    double dx;
    double dp;
    double dxdp;
    double dpi;
    double gup_ratio;  // dx dpi / ((hbar/2)(1 + gamma <x>))
};
std::vector<UncertaintySample> uncertainty_timeseries(const ModelParams& p, double alpha_abs,
                                                      const EvolutionConfig& cfg);

} // namespace pdmosc
