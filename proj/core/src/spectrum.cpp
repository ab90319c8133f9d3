#include "pdmosc/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "pdmosc/errors.hpp"
#include "pdmosc/grid.hpp"
#include "pdmosc/quadrature.hpp"
#include "pdmosc/special.hpp"

namespace pdmosc {

std::optional<int> max_bound_index(const ModelParams& p)
{
    if (!p.deformed())
        return std::nullopt;
    const double s = p.s();
    if (!(2.0 * s - 1.0 > 0.0))
        throw NoBoundStateError("2s - 1 <= 0: no bound state (gamma sigma0 >= sqrt 2)");
    auto n = static_cast<int>(std::floor(s - 0.5));
    while (n >= 0 && !(2.0 * s - 2.0 * n - 1.0 > 0.0))
        --n;
    while (2.0 * s - 2.0 * (n + 1) - 1.0 > 0.0)
        ++n;
    return n;
}

void require_bound(const ModelParams& p, int n)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    const auto nmax = max_bound_index(p);
    if (nmax && n > *nmax)
        throw BoundIndexError("level n = " + std::to_string(n) + " exceeds the bound range (n_max = " +
                              std::to_string(*nmax) + ")");
}

double nu(const ModelParams& p, int n) { return 2.0 * p.s() - 2.0 * n - 1.0; }

double energy(const ModelParams& p, int n)
{
    require_bound(p, n);
    const double k = n + 0.5;
    return p.hbar() * p.omega0() * k - p.hbar() * p.hbar() * p.gamma() * p.gamma() / (2.0 * p.m0()) * k * k;
}

SpectrumResult analytic_spectrum(const ModelParams& p, int n_max)
{
    const auto bound = max_bound_index(p);
    const int top = bound ? std::min(n_max, *bound) : n_max;
    SpectrumResult r;
    for (int n = 0; n <= top; ++n)
        r.entries.push_back({n, energy(p, n), Source::Analytic});
    return r;
}

namespace {

struct MorsePrefactor {
    double value;  // (-1)^n N sqrt(2s) e^{-z/2} z^{(mu-1)/2}
    double z;
};

MorsePrefactor morse_prefactor(const ModelParams& p, int n, double mu, double x)
{
    if (!p.deformed())
        throw DomainError("morse_state requires gamma > 0");
    if (!(mu > 0.0))
        throw BoundIndexError("morse_state: mu = " + std::to_string(mu) + " is not positive");
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    const double u = 1.0 + p.gamma() * x;
    if (!(u > 0.0))
        return {0.0, 0.0};
    const double s = p.s();
    const double z = 2.0 * s * u;
    const double ln_n2 = std::log(mu) + std::log(p.gamma()) + ln_gamma(n + 1.0) - ln_gamma(mu + n + 1.0);
    const double lv = 0.5 * ln_n2 + 0.5 * std::log(2.0 * s) - 0.5 * z + 0.5 * (mu - 1.0) * std::log(z);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return {sign * std::exp(lv), z};
}

double hermite_derivative(int n, double xi)
{
    double d = -std::sqrt((n + 1) / 2.0) * hermite_function(n + 1, xi);
    if (n > 0)
        d += std::sqrt(n / 2.0) * hermite_function(n - 1, xi);
    return d;
}

} // namespace

double morse_state(const ModelParams& p, int n, double mu, double x)
{
    const auto pre = morse_prefactor(p, n, mu, x);
    if (pre.value == 0.0)
        return 0.0;
    return pre.value * assoc_laguerre(n, mu, pre.z);
}

double morse_state_derivative(const ModelParams& p, int n, double mu, double x)
{
    const auto pre = morse_prefactor(p, n, mu, x);
    if (pre.value == 0.0)
        return 0.0;
    const double z = pre.z;
    const double dz = (-0.5 + 0.5 * (mu - 1.0) / z) * assoc_laguerre(n, mu, z) +
                      assoc_laguerre_derivative(n, mu, z);
    return 2.0 * p.s() * p.gamma() * pre.value * dz;
}

double eigenfunction(const ModelParams& p, int n, double x)
{
    require_bound(p, n);
    if (!p.deformed()) {
        const double s0 = p.sigma0();
        return hermite_function(n, x / s0) / std::sqrt(s0);
    }
    return morse_state(p, n, nu(p, n), x);
}

double eigenfunction_derivative(const ModelParams& p, int n, double x)
{
    require_bound(p, n);
    if (!p.deformed()) {
        const double s0 = p.sigma0();
        return hermite_derivative(n, x / s0) / (s0 * std::sqrt(s0));
    }
    return morse_state_derivative(p, n, nu(p, n), x);
}

double ground_density_lambda(const ModelParams& p)
{
    const double lam = 2.0 * p.s() - 1.0;
    if (!(lam > 0.0))
        throw DomainError("ground_density: lambda = 2s - 1 must be positive");
    return lam;
}

double ground_density(const ModelParams& p, double x)
{
    if (!p.deformed()) {
        const double h = hermite_function(0, x / p.sigma0());
        return h * h / p.sigma0();
    }
    const double lam = ground_density_lambda(p);
    const double u = 1.0 + p.gamma() * x;
    if (!(u > 0.0))
        return 0.0;
    const double z = 2.0 * p.s() * u;
    const double s0 = p.sigma0();
    const double lv = std::log(2.0 / (p.gamma() * s0 * s0)) - ln_gamma(lam) - z + (lam - 1.0) * std::log(z);
    return std::exp(lv);
}

Moments moments(const ModelParams& p, int n)
{
    require_bound(p, n);
    const double k = n + 0.5;
    const double s0 = p.sigma0();
    const double g = p.gtilde();
    Moments m{};
    m.ex = -p.gamma() * s0 * s0 * k;
    m.ex2 = s0 * s0 * k;
    m.epi = 0.0;
    m.epi2 = p.hbar() * p.hbar() / (s0 * s0) * k * (1.0 - g * g * k);
    return m;
}

double uncertainty_product(const ModelParams& p, int n)
{
    const auto m = moments(p, n);
    return std::sqrt((m.ex2 - m.ex * m.ex) * (m.epi2 - m.epi * m.epi));
}

double number_expectation(const ModelParams& p, int n)
{
    require_bound(p, n);
    const double g = p.gtilde();
    return n * (1.0 - 0.5 * g * g * (n + 1.0));
}

namespace {

template <class R, class F>
R integrate_full_impl(const ModelParams& p, double lambda, const F& f)
{
    constexpr int panels = 240;
    if (!p.deformed()) {
        const double L = 20.0 * p.sigma0();
        return quadrature(f, -L, L, panels);
    }
    const double s = p.s();
    const double g = p.gamma();
    const double zc = std::max(lambda, 1.0);
    const double spread = 40.0 * std::sqrt(zc) + 60.0;
    const double z_hi = zc + spread;
    const double z_lo = std::max(0.0, zc - spread);
    auto fz = [&](double z) -> R { return f(p.z_to_x(z)) / (2.0 * s * g); };
    if (z_lo == 0.0 && lambda < 1.0) {
        // z^(lambda-1) end point: z = zc u^(1/lambda) makes the integrand regular in u.
        // Below z_min, 1 + gamma x has too few digits left; there f z^(1-lambda) is
        // continued linearly from z_min and 2 z_min and integrated exactly.
        const double q = 1.0 / lambda;
        const double z_min = 2.0 * s * 1e-6;
        const double u_min = std::pow(z_min / zc, lambda);
        auto fu = [&](double u) -> R { return fz(zc * std::pow(u, q)) * (zc * q * std::pow(u, q - 1.0)); };
        const R h1 = fz(z_min) * std::pow(z_min, 1.0 - lambda);
        const R h2 = fz(2.0 * z_min) * std::pow(2.0 * z_min, 1.0 - lambda);
        const R slope = (h2 - h1) / z_min;
        const R h0 = h1 - slope * z_min;
        const R tail = h0 * (std::pow(z_min, lambda) / lambda) + slope * (std::pow(z_min, lambda + 1.0) / (lambda + 1.0));
        return tail + quadrature(fu, u_min, 1.0, panels) + quadrature(fz, zc, z_hi, panels);
    }
    if (z_lo == 0.0)
        return quadrature_graded(fz, 0.0, z_hi, panels);
    return quadrature(fz, z_lo, z_hi, panels);
}

} // namespace

double integrate_full(const ModelParams& p, double lambda, const std::function<double(double)>& f)
{
    return integrate_full_impl<double>(p, lambda, f);
}

std::complex<double> integrate_full_complex(const ModelParams& p, double lambda,
                                            const std::function<std::complex<double>(double)>& f)
{
    return integrate_full_impl<std::complex<double>>(p, lambda, f);
}

int node_count(const ModelParams& p, int n)
{
    require_bound(p, n);
    const Grid g = p.deformed() ? resolved_grid(p, nu(p, n), 0.002) : Grid::uniform(Coordinate::X, -12.0 * p.sigma0(), 12.0 * p.sigma0(), 12001);
    const auto xs = g.x_values(p);
    std::vector<double> v(xs.size());
    double vmax = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        v[i] = eigenfunction(p, n, xs[i]);
        vmax = std::max(vmax, std::abs(v[i]));
    }
    int changes = 0;
    double last = 0.0;
    for (double y : v) {
        if (std::abs(y) < 1e-10 * vmax)
            continue;
        if (last != 0.0 && (y > 0.0) != (last > 0.0))
            ++changes;
        last = y;
    }
    return changes;
}

} // namespace pdmosc
