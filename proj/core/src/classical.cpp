#include "pdmosc/classical.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pdmosc/errors.hpp"

namespace pdmosc {

namespace {
constexpr double pi = std::numbers::pi;

void require_oscillatory(const ModelParams& p, double amplitude)
{
    if (!(amplitude >= 0.0))
        throw DomainError("amplitude must be >= 0");
    const double ga = p.gamma() * amplitude;
    if (!(ga * ga < 1.0))
        throw RegimeError("gamma^2 A^2 >= 1: the orbit is not oscillatory");
}
} // namespace

double unwrapped_phase(double kappa, double omega, double dt)
{
    const double u = 0.5 * omega * dt;
    const double k = std::round(u / pi);
    return 2.0 * (std::atan(kappa * std::tan(u - k * pi)) + k * pi);
}

double unwrapped_phase_time(double kappa, double omega, double theta)
{
    double t = std::fmod(theta, 2.0 * pi);
    if (t < 0.0)
        t += 2.0 * pi;
    const double half = 0.5 * t;
    const double u = std::atan2(std::sin(half), kappa * std::cos(half));
    return 2.0 * u / omega;
}

ClassicalOrbit::ClassicalOrbit(const ModelParams& params, double amplitude, double t0)
    : params_(params), amplitude_(amplitude), t0_(t0), omega_(orbit_frequency(params, amplitude))
{
}

double ClassicalOrbit::period() const { return 2.0 * pi / omega_; }

double orbit_frequency(const ModelParams& p, double amplitude)
{
    require_oscillatory(p, amplitude);
    const double ga = p.gamma() * amplitude;
    return p.omega0() * std::sqrt(1.0 - ga * ga);
}

double deformed_phase(const ClassicalOrbit& orbit, double t)
{
    const double ga = orbit.params().gamma() * orbit.amplitude();
    const double kappa = std::sqrt((1.0 + ga) / (1.0 - ga));
    return unwrapped_phase(kappa, orbit.omega_gamma(), t - orbit.t0());
}

TrajectoryPoint trajectory(const ClassicalOrbit& orbit, double t)
{
    const auto& p = orbit.params();
    const double th = deformed_phase(orbit, t);
    const double a = orbit.amplitude();
    TrajectoryPoint tp{};
    tp.x = a * std::cos(th);
    tp.pi_gamma = -p.m0() * p.omega0() * a * std::sin(th);
    tp.p = tp.pi_gamma / p.jacobian(tp.x);
    return tp;
}

double classical_energy(const ModelParams& p, const ClassicalState& s)
{
    const double u = p.jacobian(s.x);
    return u * u * s.p * s.p / (2.0 * p.m0()) + 0.5 * p.m0() * p.omega0() * p.omega0() * s.x * s.x;
}

PhasePoint canonical_map(const ModelParams& p, const ClassicalState& s)
{
    return {p.x_to_xgamma(s.x), p.jacobian(s.x) * s.p};
}

ClassicalState canonical_map_inverse(const ModelParams& p, const PhasePoint& q)
{
    const double x = p.xgamma_to_x(q.x_gamma);
    const double u = p.deformed() ? std::exp(p.gamma() * q.x_gamma) : 1.0;
    return {x, q.pi_gamma / u};
}

MorseParams morse_params(const ModelParams& p)
{
    if (!p.deformed())
        throw DomainError("morse_params: gamma = 0 has no Morse image");
    const double g = p.gamma();
    MorseParams m;
    m.W_gamma = p.m0() * p.omega0() * p.omega0() / (2.0 * g * g);
    m.kappa_gamma = -g;
    const double gs2 = p.gtilde() * p.gtilde();
    if (gs2 < 1.0) {
        m.has_shifted = true;
        m.omega_small = p.omega0() * (1.0 - gs2);
        m.Wtilde_gamma = p.m0() * m.omega_small * m.omega_small / (2.0 * g * g);
        m.delta_gamma = std::log1p(-gs2) / g;
    }
    return m;
}

std::pair<double, double> classical_alpha(const ModelParams& p, const ClassicalState& s)
{
    const double k = 1.0 / (std::sqrt(2.0) * p.sigma0());
    return {k * s.x, k * p.jacobian(s.x) * s.p / (p.m0() * p.omega0())};
}

std::vector<std::pair<double, ClassicalState>>
rk4_oracle(const ModelParams& p, const ClassicalState& s0, double t_end, double dt)
{
    if (!(dt > 0.0))
        throw DomainError("rk4_oracle: dt must be positive");
    if (!(t_end >= 0.0))
        throw DomainError("rk4_oracle: t_end must be >= 0");
    p.jacobian(s0.x);

    const double g = p.gamma();
    const double m = p.m0();
    const double w2 = p.omega0() * p.omega0();
    const double floor = 1e3 * std::numeric_limits<double>::epsilon();
    auto rhs = [&](double x, double mom, double& dx, double& dp) {
        const double u = 1.0 + g * x;
        if (!(u > floor))
            throw DomainError("rk4_oracle: trajectory reached x = -1/gamma");
        dx = u * u * mom / m;
        dp = -g * u * mom * mom / m - m * w2 * x;
    };

    std::vector<std::pair<double, ClassicalState>> out;
    out.emplace_back(0.0, s0);
    if (t_end == 0.0)
        return out;
    const auto steps = static_cast<long>(std::ceil(t_end / dt * (1.0 - 1e-12)));
    out.reserve(static_cast<std::size_t>(steps) + 1);
    double x = s0.x, mom = s0.p, t = 0.0;
    for (long i = 0; i < steps; ++i) {
        const double h = (i + 1 == steps) ? t_end - t : dt;
        double k1x, k1p, k2x, k2p, k3x, k3p, k4x, k4p;
        rhs(x, mom, k1x, k1p);
        rhs(x + 0.5 * h * k1x, mom + 0.5 * h * k1p, k2x, k2p);
        rhs(x + 0.5 * h * k2x, mom + 0.5 * h * k2p, k3x, k3p);
        rhs(x + h * k3x, mom + h * k3p, k4x, k4p);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        mom += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        if (!(1.0 + g * x > floor))
            throw DomainError("rk4_oracle: trajectory reached x = -1/gamma");
        t = (i + 1 == steps) ? t_end : static_cast<double>(i + 1) * dt;
        out.emplace_back(t, ClassicalState{x, mom});
    }
    return out;
}

} // namespace pdmosc
