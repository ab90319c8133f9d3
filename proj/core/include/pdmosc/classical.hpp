#pragma once

#include <utility>
#include <vector>

#include "pdmosc/params.hpp"

namespace pdmosc {

struct ClassicalState {
    double x;
    double p;
};

struct PhasePoint {
    double x_gamma;
    double pi_gamma;
};

class ClassicalOrbit {
public:
    // Throws RegimeError unless gamma^2 A^2 < 1.
    ClassicalOrbit(const ModelParams& params, double amplitude, double t0 = 0.0);

    const ModelParams& params() const { return params_; }
    double amplitude() const { return amplitude_; }
    double t0() const { return t0_; }
    double omega_gamma() const { return omega_; }
    double period() const;

private:
    ModelParams params_;
    double amplitude_;
    double t0_;
    double omega_;
};

struct TrajectoryPoint {
    double x;
    double p;
    double pi_gamma;
};

struct MorseParams {
    double W_gamma;
    double kappa_gamma;
    // SUSY-shifted oscillator; only set when gamma^2 sigma0^2 < 1.
    bool has_shifted = false;
    double Wtilde_gamma = 0.0;
    double omega_small = 0.0;
    double delta_gamma = 0.0;
};

// Continuous branch of the 2 atan(kappa tan(u)) phase, u = omega dt / 2.
double unwrapped_phase(double kappa, double omega, double dt);
// Inverse of unwrapped_phase on one branch: smallest dt >= 0 with phase == theta (mod 2 pi).
double unwrapped_phase_time(double kappa, double omega, double theta);

double orbit_frequency(const ModelParams& p, double amplitude);
double deformed_phase(const ClassicalOrbit& orbit, double t);
TrajectoryPoint trajectory(const ClassicalOrbit& orbit, double t);
double classical_energy(const ModelParams& p, const ClassicalState& s);
PhasePoint canonical_map(const ModelParams& p, const ClassicalState& s);
ClassicalState canonical_map_inverse(const ModelParams& p, const PhasePoint& q);
MorseParams morse_params(const ModelParams& p);

// Classical alpha_gamma = (x + i (1+gamma x) p/(m0 omega0))/(sqrt2 sigma0), as (Re, Im).
std::pair<double, double> classical_alpha(const ModelParams& p, const ClassicalState& s);

// Fixed-step RK4 on Hamilton's equations. The last step is shortened to land on t_end.
// Throws DomainError if x reaches -1/gamma.
std::vector<std::pair<double, ClassicalState>>
rk4_oracle(const ModelParams& p, const ClassicalState& s0, double t_end, double dt);

} // namespace pdmosc
