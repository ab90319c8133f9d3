#include "pdmosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pdmosc/errors.hpp"
#include "pdmosc/operators.hpp"
#include "pdmosc/spectrum.hpp"
#include "pdmosc/susy.hpp"
#include "pdmosc/tridiag.hpp"

namespace pdmosc {

void FdConfig::validate() const
{
    if (!(L_left > 0.0) || !(L_right > 0.0))
        throw DomainError("FdConfig: L_left and L_right must be > 0");
    if (n_points < 201 || n_points % 2 == 0)
        throw DomainError("FdConfig: n_points must be odd and >= 201");
    if (k_states < 1)
        throw DomainError("FdConfig: k_states must be >= 1");
}

FdConfig FdConfig::literal(int k_states)
{
    FdConfig c;
    c.k_states = k_states;
    return c;
}

FdConfig FdConfig::reference(int k_states)
{
    FdConfig c;
    c.k_states = k_states;
    c.adaptive_left = true;
    c.richardson = true;
    return c;
}

namespace {

constexpr double max_left_sigma0 = 400.0;

struct Discretization {
    std::vector<double> xg;  // interior points
    std::vector<double> diag;
    std::vector<double> off;
    double h;
};

double morse_potential(const ModelParams& p, MorseVariant v, double xg, double e0)
{
    const double g = p.gamma();
    const double x = std::expm1(g * xg) / g;
    const double u = 0.5 * p.m0() * p.omega0() * p.omega0() * x * x;
    if (v == MorseVariant::Base)
        return u;
    return u - e0 + p.hbar() * p.omega0() * std::exp(g * xg);
}

Discretization discretize(const ModelParams& p, MorseVariant v, double left, double right, int n)
{
    Discretization d;
    d.h = (right - left) / (n - 1);
    const double e0 = v == MorseVariant::Base ? 0.0 : energy(p, 0);
    const double kin = p.hbar() * p.hbar() / (p.m0() * d.h * d.h);
    const int m = n - 2;
    d.xg.resize(m);
    d.diag.resize(m);
    d.off.assign(m - 1, -0.5 * kin);
    for (int i = 0; i < m; ++i) {
        d.xg[i] = left + (i + 1) * d.h;
        d.diag[i] = kin + morse_potential(p, v, d.xg[i], e0);
    }
    return d;
}

// Left edge (in x_gamma) where the Morse state with index mu has fallen to e^{-24} of its
// peak: (mu/2) ln(z/mu) + (mu - z)/2 = -24 with z = 2s e^{gamma x_gamma}, z < mu.
double decay_edge(const ModelParams& p, double mu)
{
    const auto f = [mu](double lz) { return 0.5 * mu * (lz - std::log(mu)) + 0.5 * (mu - std::exp(lz)) + 24.0; };
    double hi = std::log(mu);
    double lo = hi - 1.0;
    while (f(lo) > 0.0)
        lo = hi - 2.0 * (hi - lo);
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? hi : lo) = mid;
    }
    return (lo - std::log(2.0 * p.s())) / p.gamma();
}

std::optional<double> adaptive_left(const ModelParams& p, MorseVariant v, int k)
{
    const int top = v == MorseVariant::Base ? *max_bound_index(p) : *max_partner_minus_index(p);
    const double shift = v == MorseVariant::Base ? 1.0 : 3.0;
    std::optional<double> left;
    for (int j = 0; j <= std::min(k - 1, top); ++j) {
        const double e = -decay_edge(p, 2.0 * p.s() - 2.0 * j - shift);
        left = left ? std::max(*left, e) : e;
    }
    return left;
}

} // namespace

FdResult solve_morse_fd(const ModelParams& p, MorseVariant variant, const FdConfig& cfg)
{
    cfg.validate();
    if (!p.deformed())
        throw DomainError("solve_morse_fd requires gamma > 0");
    const double s0 = p.sigma0();
    std::vector<std::string> warnings;

    double left = cfg.L_left * s0;
    const double right = cfg.L_right * s0;
    int n = cfg.n_points;
    if (cfg.adaptive_left) {
        if (const auto edge = adaptive_left(p, variant, cfg.k_states)) {
            double want = *edge;
            if (want > max_left_sigma0 * s0) {
                want = max_left_sigma0 * s0;
                warnings.push_back("adaptive left edge capped at " + std::to_string(max_left_sigma0) + " sigma0");
            }
            left = std::max(left, want);
        }
        // keep the literal spacing
        const double h0 = (cfg.L_left + cfg.L_right) * s0 / (cfg.n_points - 1);
        const auto need = static_cast<int>(std::ceil((left + right) / h0)) + 1;
        n = std::max(n, need | 1);
    }

    const int k = cfg.k_states;
    if (k > n - 2)
        throw DimensionError("k_states exceeds the number of interior grid points");

    const auto coarse = discretize(p, variant, -left, right, n);
    std::vector<double> values;
    Discretization fine_d;
    TridiagEigen fine;
    if (cfg.richardson) {
        const auto ec = tridiag_lowest_eigen(coarse.diag, coarse.off, static_cast<std::size_t>(k));
        fine_d = discretize(p, variant, -left, right, 2 * n - 1);
        fine = tridiag_lowest_eigenpairs(fine_d.diag, fine_d.off, static_cast<std::size_t>(k));
        values.resize(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] = (4.0 * fine.values[i] - ec[i]) / 3.0;
    } else {
        fine_d = coarse;
        fine = tridiag_lowest_eigenpairs(coarse.diag, coarse.off, static_cast<std::size_t>(k));
        values = fine.values;
    }

    const double w = 0.5 * p.m0() * p.omega0() * p.omega0() / (p.gamma() * p.gamma());
    const double plateau = variant == MorseVariant::Base ? w : w - energy(p, 0);

    FdResult r{{}, values, Grid(Coordinate::XGamma, fine_d.xg), {}, plateau, left / s0, warnings};
    const double scale = 1.0 / std::sqrt(fine_d.h);
    for (int i = 0; i < k; ++i) {
        if (values[i] < plateau - 1e-6 * std::abs(plateau))
            r.spectrum.entries.push_back({i, values[i], Source::Oracle});
        auto v = fine.vectors[i];
        for (auto& e : v)
            e *= scale;
        r.phi.push_back(std::move(v));
    }
    if (static_cast<int>(r.spectrum.entries.size()) < k)
        r.warnings.push_back("too few bound states: requested " + std::to_string(k) + ", found " +
                             std::to_string(r.spectrum.entries.size()));
    return r;
}

WaveFn fd_eigenfunction(const ModelParams& p, const FdResult& r, int k)
{
    if (k < 0 || k >= static_cast<int>(r.phi.size()))
        throw BoundIndexError("fd_eigenfunction: state index out of range");
    const auto& xg = r.grid.points();
    std::vector<cplx> v(xg.size());
    for (std::size_t i = 0; i < xg.size(); ++i)
        v[i] = r.phi[k][i] * std::exp(-0.5 * p.gamma() * xg[i]);
    return WaveFn(r.grid, std::move(v), Convention::Psi);
}

namespace {

// Checked on phi = sqrt(J) psi, whose square is the density per unit x_gamma.
void require_vanishing_ends(const ModelParams& p, const WaveFn& psi)
{
    const WaveFn f = to_phi(p, psi);
    double peak = 0.0;
    for (const auto& v : f.values)
        peak = std::max(peak, std::norm(v));
    const double tol = 1e-10 * peak;
    if (std::norm(f.values.front()) > tol || std::norm(f.values.back()) > tol)
        throw GridError("expectation_quadrature: density does not vanish at the grid ends");
}

} // namespace

cplx expectation_quadrature(const ModelParams& p, const WaveFn& psi_in, Observable o)
{
    require_min_points(psi_in.grid);
    const WaveFn psi = psi_in.convention == Convention::Psi ? psi_in : to_psi(p, psi_in);
    switch (o) {
    case Observable::X:
        return inner_product(p, psi, position(p, psi));
    case Observable::X2:
        return inner_product(p, position(p, psi), position(p, psi));
    case Observable::Pi:
        require_vanishing_ends(p, psi);
        return inner_product(p, psi, pseudo_momentum(p, psi));
    case Observable::Pi2: {
        require_vanishing_ends(p, psi);
        const auto f = pseudo_momentum(p, psi);
        return inner_product(p, f, f);
    }
    case Observable::P:
        require_vanishing_ends(p, psi);
        return inner_product(p, psi, momentum(p, psi));
    case Observable::P2: {
        require_vanishing_ends(p, psi);
        const auto f = momentum(p, psi);
        return inner_product(p, f, f);
    }
    }
    throw DomainError("unknown observable");
}

WaveFn propagate_crank_nicolson(const ModelParams& p, const WaveFn& psi0, double t, int steps)
{
    if (psi0.grid.coordinate() != Coordinate::XGamma)
        throw GridError("propagate_crank_nicolson needs an x_gamma grid");
    if (psi0.convention != Convention::Psi)
        throw ConventionError("propagate_crank_nicolson expects a Psi-convention state");
    if (steps < 1)
        throw DomainError("steps must be >= 1");
    require_min_points(psi0.grid);

    const auto& xg = psi0.grid.points();
    const std::size_t n = xg.size();
    const double h = psi0.grid.spacing();
    const double dt = t / steps;
    const double kin = p.hbar() * p.hbar() / (p.m0() * h * h);
    const auto xs = psi0.grid.x_values(p);

    auto phi = to_phi(p, psi0).values;
    phi.front() = phi.back() = 0.0;

    // (1 + i dt H / 2 hbar) phi' = (1 - i dt H / 2 hbar) phi, interior points only
    const cplx c(0.0, 0.5 * dt / p.hbar());
    const std::size_t m = n - 2;
    std::vector<cplx> hd(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = xs[i + 1];
        hd[i] = kin + 0.5 * p.m0() * p.omega0() * p.omega0() * x * x;
    }
    const cplx ho = -0.5 * kin;
    const cplx lo = c * ho;

    // Thomas factorization of the constant left-hand matrix
    std::vector<cplx> cp(m), dinv(m);
    {
        cplx prev = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const cplx di = 1.0 + c * hd[i] - (i ? lo * prev : cplx(0.0));
            dinv[i] = 1.0 / di;
            cp[i] = lo * dinv[i];
            prev = cp[i];
        }
    }

    std::vector<cplx> rhs(m), y(m);
    for (int step = 0; step < steps; ++step) {
        for (std::size_t i = 0; i < m; ++i) {
            cplx hv = hd[i] * phi[i + 1] + ho * (phi[i] + phi[i + 2]);
            rhs[i] = phi[i + 1] - c * hv;
        }
        y[0] = rhs[0] * dinv[0];
        for (std::size_t i = 1; i < m; ++i)
            y[i] = (rhs[i] - lo * y[i - 1]) * dinv[i];
        for (std::size_t i = m - 1; i-- > 0;)
            y[i] -= cp[i] * y[i + 1];
        for (std::size_t i = 0; i < m; ++i)
            phi[i + 1] = y[i];
    }

    return to_psi(p, WaveFn(psi0.grid, std::move(phi), Convention::Phi));
}

} // namespace pdmosc
