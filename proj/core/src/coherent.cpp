#include "pdmosc/coherent.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pdmosc/classical.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/special.hpp"
#include "pdmosc/spectrum.hpp"

namespace pdmosc {

namespace {
constexpr double sqrt2 = std::numbers::sqrt2;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
} // namespace

double coherent_lambda(const ModelParams& p, cplx alpha)
{
    return 2.0 * p.s() * (1.0 + sqrt2 * p.gtilde() * alpha.real()) - 1.0;
}

CoherentState::CoherentState(const ModelParams& params, cplx alpha) : params_(params), alpha_(alpha)
{
    if (params_.deformed() && !(coherent_lambda(params_, alpha_) > 0.0))
        throw DomainError("coherent state is not normalizable: lambda_cs <= 0");
}

double CoherentState::lambda_cs() const
{
    return params_.deformed() ? coherent_lambda(params_, alpha_) : std::numeric_limits<double>::infinity();
}

double CoherentState::amplitude() const { return sqrt2 * params_.sigma0() * std::abs(alpha_); }

cplx coherent_wavefunction(const CoherentState& st, double x)
{
    const auto& p = st.params();
    const cplx a = st.alpha();
    const double s0 = p.sigma0();
    if (!p.deformed()) {
        const double xi = x / s0;
        const cplx e = -0.5 * xi * xi + sqrt2 * a * xi - a.real() * a.real();
        return std::exp(e) / std::sqrt(std::sqrt(std::numbers::pi) * s0);
    }
    const double u = 1.0 + p.gamma() * x;
    if (!(u > 0.0))
        return 0.0;
    const double s = p.s();
    const double z = 2.0 * s * u;
    const double lam = st.lambda_cs();
    const cplx k = sqrt2 * a / p.gtilde() + s - 1.0;
    const cplx e = 0.5 * (std::log(p.gamma()) - ln_gamma(lam) + std::log(2.0 * s)) - 0.5 * z + k * std::log(z);
    return std::exp(e);
}

cplx perelomov_wavefunction(const CoherentState& st, double x)
{
    const auto& p = st.params();
    if (p.deformed() && !(1.0 + p.gamma() * x > 0.0))
        return 0.0;
    const double xg = p.x_to_xgamma(x);
    return std::exp(sqrt2 * st.alpha() * xg / p.sigma0()) * eigenfunction(p, 0, x);
}

CoherentMoments coherent_moments(const CoherentState& st)
{
    const auto& p = st.params();
    const double s0 = p.sigma0();
    const double g = p.gtilde();
    const double u = 2.0 * st.alpha().real();
    const double im = st.alpha().imag();
    const double h = p.hbar();
    CoherentMoments m{};
    m.ex = s0 * u / sqrt2 - 0.5 * p.gamma() * s0 * s0;
    m.ex2 = 0.5 * s0 * s0 * (1.0 + u * u - g * u / sqrt2);
    m.epi = sqrt2 * h * im / s0;
    m.epi2 = 0.5 * h * h / (s0 * s0) * (1.0 + 4.0 * im * im + g * u / sqrt2 - 0.5 * g * g);
    return m;
}

PMoments coherent_p_moments(const CoherentState& st)
{
    const auto& p = st.params();
    const double s0 = p.sigma0();
    const double g = p.gtilde();
    const double u = 2.0 * st.alpha().real();
    const double im = st.alpha().imag();
    const double h = p.hbar();
    const double d1 = 1.0 + g * u / sqrt2 - g * g;
    const double d2 = 1.0 + g * u / sqrt2 - 1.5 * g * g;
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw DomainError("coherent_p_moments: denominator not positive (state outside validity region)");
    PMoments m{};
    m.ep = sqrt2 * h * im / (s0 * d1);
    m.ep2 = 0.5 * h * h / (s0 * s0) / d2 * (1.0 + 4.0 * im * im / d1);
    return m;
}

double coherent_amplitude_factor(const ModelParams& p)
{
    const double g = p.gtilde();
    return 1.0 - 0.5 * g * g;
}

double coherent_frequency(const ModelParams& p, double alpha_abs)
{
    if (!(alpha_abs >= 0.0))
        throw DomainError("|alpha| must be >= 0");
    const double c = coherent_amplitude_factor(p);
    const double ga = p.gamma() * sqrt2 * p.sigma0() * alpha_abs;
    const double r = c * c - ga * ga;
    if (!(c > 0.0) || !(r > 0.0))
        throw RegimeError("coherent phase is not oscillatory: (1 - g^2/2)^2 <= gamma^2 A^2");
    return p.omega0() * std::sqrt(r);
}

namespace {
double coherent_kappa(const ModelParams& p, double alpha_abs)
{
    const double a_cs = sqrt2 * p.sigma0() * alpha_abs / coherent_amplitude_factor(p);
    const double ga = p.gamma() * a_cs;
    return std::sqrt((1.0 + ga) / (1.0 - ga));
}
} // namespace

double coherent_phase(const ModelParams& p, double alpha_abs, double t, double t0)
{
    const double om = coherent_frequency(p, alpha_abs);
    return unwrapped_phase(coherent_kappa(p, alpha_abs), om, t - t0);
}

void EvolutionConfig::validate() const
{
    if (!(t_end > t0))
        throw DomainError("EvolutionConfig: t_end must exceed t0");
    if (samples < 2)
        throw DomainError("EvolutionConfig: samples must be >= 2");
}

double EvolutionConfig::time(int i) const
{
    if (i == samples - 1)
        return t_end;
    return t0 + (t_end - t0) * static_cast<double>(i) / static_cast<double>(samples - 1);
}

cplx evolved_alpha(const CoherentState& s0, double t, double t0)
{
    const auto& p = s0.params();
    const double r = std::abs(s0.alpha());
    const double om = coherent_frequency(p, r);
    if (r == 0.0)
        return 0.0;
    const double kappa = coherent_kappa(p, r);
    const double shift = unwrapped_phase_time(kappa, om, -std::arg(s0.alpha()));
    const double theta = unwrapped_phase(kappa, om, t - t0 + shift);
    return std::polar(r, -theta);
}

std::vector<EvolutionSample> evolve(const CoherentState& s0, const EvolutionConfig& cfg)
{
    cfg.validate();
    const auto& p = s0.params();
    const double e0 = energy(p, 0);
    std::vector<EvolutionSample> out;
    out.reserve(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) {
        const double t = cfg.time(i);
        const cplx a = (i == 0) ? s0.alpha() : evolved_alpha(s0, t, cfg.t0);
        out.push_back({t, CoherentState(p, a), -e0 * (t - cfg.t0) / p.hbar()});
    }
    return out;
}

ExpectedTrajectory expected_trajectory(const ModelParams& p, double alpha_abs, double t, double t0)
{
    const double th = coherent_phase(p, alpha_abs, t, t0);
    const double a = sqrt2 * p.sigma0() * alpha_abs;
    const double g = p.gtilde();
    const double d = 1.0 + p.gamma() * a * std::cos(th) - g * g;
    if (!(d > 0.0))
        throw DomainError("expected_trajectory: <p> denominator not positive");
    ExpectedTrajectory e{};
    e.ex = a * std::cos(th) - 0.5 * p.gamma() * p.sigma0() * p.sigma0();
    e.epi = -p.m0() * p.omega0() * a * std::sin(th);
    e.ep = e.epi / d;
    return e;
}

std::vector<std::vector<double>> density_evolution(const CoherentState& s0, const EvolutionConfig& cfg,
                                                   const Grid& grid)
{
    const auto xs = grid.x_values(s0.params());
    std::vector<std::vector<double>> rho;
    for (const auto& smp : evolve(s0, cfg)) {
        std::vector<double> row(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            row[i] = std::norm(coherent_wavefunction(smp.state, xs[i]));
        rho.push_back(std::move(row));
    }
    return rho;
}

namespace {
GupCell gup_cell(const ModelParams& p, cplx a)
{
    GupCell c{a.real(), a.imag(), false, nan, nan, nan, nan, nan, nan};
    if (p.deformed() && !(coherent_lambda(p, a) > 0.0))
        return c;
    const CoherentState st(p, a);
    const auto m = coherent_moments(st);
    PMoments pm{};
    try {
        pm = coherent_p_moments(st);
    } catch (const DomainError&) {
        return c;
    }
    const double vx = m.ex2 - m.ex * m.ex;
    const double vp = pm.ep2 - pm.ep * pm.ep;
    const double vpi = m.epi2 - m.epi * m.epi;
    if (!(vx >= 0.0) || !(vp >= 0.0) || !(vpi >= 0.0))
        return c;
    c.valid = true;
    c.dx = std::sqrt(vx);
    c.dp = std::sqrt(vp);
    c.dxdp = c.dx * c.dp;
    c.dpi = std::sqrt(vpi);
    c.dxdpi = c.dx * c.dpi;
    c.gup_bound = 0.5 * p.hbar() * (1.0 + p.gamma() * m.ex);
    return c;
}
} // namespace

std::vector<GupCell> gup_surface(const ModelParams& p, double re_lo, double re_hi, double im_lo,
                                 double im_hi, int resolution)
{
    if (resolution < 2)
        throw DomainError("gup_surface: resolution must be >= 2");
    if (!(re_lo < re_hi) || !(im_lo < im_hi))
        throw DomainError("gup_surface: empty range");
    std::vector<GupCell> cells;
    cells.reserve(static_cast<std::size_t>(resolution * resolution));
    for (int i = 0; i < resolution; ++i) {
        const double re = re_lo + (re_hi - re_lo) * i / (resolution - 1.0);
        for (int j = 0; j < resolution; ++j) {
            const double im = im_lo + (im_hi - im_lo) * j / (resolution - 1.0);
            cells.push_back(gup_cell(p, cplx(re, im)));
        }
    }
    return cells;
}

std::vector<UncertaintySample> uncertainty_timeseries(const ModelParams& p, double alpha_abs,
                                                      const EvolutionConfig& cfg)
{
    cfg.validate();
    coherent_frequency(p, alpha_abs);
    const CoherentState s0(p, cplx(alpha_abs, 0.0));
    std::vector<UncertaintySample> out;
    out.reserve(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) {
        const double t = cfg.time(i);
        const auto c = gup_cell(p, evolved_alpha(s0, t, cfg.t0));
        out.push_back({t, c.dx, c.dp, c.dxdp, c.dpi, c.dxdpi / c.gup_bound});
    }
    return out;
}

} // namespace pdmosc
