#include "pdmosc/susy.hpp"

#include <algorithm>
#include <cmath>

#include "pdmosc/errors.hpp"
#include "pdmosc/operators.hpp"
#include "pdmosc/special.hpp"
#include "pdmosc/spectrum.hpp"

namespace pdmosc {

namespace {

WaveFn first_order(const ModelParams& p, double shift, double dsign, const WaveFn& f)
{
    if (f.convention != Convention::Psi)
        throw ConventionError("ladder operators act on Psi-convention functions");
    require_min_points(f.grid);
    const double s0 = p.sigma0();
    const WaveFn df = deformed_derivative(p, f);
    const auto xs = f.grid.x_values(p);
    const double k = 1.0 / (std::sqrt(2.0) * s0);
    WaveFn out = f;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.values[i] = k * ((xs[i] + shift) * f.values[i] + dsign * s0 * s0 * df.values[i]);
    return out;
}

double hw(const ModelParams& p) { return p.hbar() * p.omega0(); }

} // namespace

WaveFn apply_annihilation(const ModelParams& p, double beta, const WaveFn& f)
{
    const double s0 = p.sigma0();
    return first_order(p, 0.5 * (beta + 1.0) * p.gamma() * s0 * s0, 1.0, f);
}

WaveFn apply_creation(const ModelParams& p, double beta, const WaveFn& f)
{
    const double s0 = p.sigma0();
    return first_order(p, 0.5 * (beta - 1.0) * p.gamma() * s0 * s0, -1.0, f);
}

WaveFn apply_b(const ModelParams& p, const WaveFn& f)
{
    const double s0 = p.sigma0();
    WaveFn out = position(p, f);
    out += cplx(0.0, s0 * s0 / p.hbar()) * pseudo_momentum(p, f);
    out *= 1.0 / (std::sqrt(2.0) * s0);
    return out;
}

WaveFn apply_b_dagger(const ModelParams& p, const WaveFn& f)
{
    const double s0 = p.sigma0();
    WaveFn out = position(p, f);
    out -= cplx(0.0, s0 * s0 / p.hbar()) * pseudo_momentum(p, f);
    out *= 1.0 / (std::sqrt(2.0) * s0);
    return out;
}

WaveFn partner_hamiltonian(const ModelParams& p, PartnerSide side, const WaveFn& f)
{
    WaveFn out = (side == PartnerSide::Plus) ? apply_creation(p, 1.0, apply_annihilation(p, 1.0, f))
                                             : apply_annihilation(p, 1.0, apply_creation(p, 1.0, f));
    out *= hw(p);
    return out;
}

double partner_potential(const ModelParams& p, PartnerSide side, double x)
{
    const double u = p.jacobian(x);
    const double v = 0.5 * p.m0() * p.omega0() * p.omega0() * x * x - energy(p, 0);
    return side == PartnerSide::Plus ? v : v + hw(p) * u;
}

std::optional<int> max_partner_minus_index(const ModelParams& p)
{
    if (!p.deformed())
        return std::nullopt;
    const double s = p.s();
    int n = -1;
    while (2.0 * s - 2.0 * (n + 1) - 3.0 > 0.0)
        ++n;
    return n;
}

double partner_energy(const ModelParams& p, int n, PartnerSide side)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    const double g = p.gtilde();
    if (side == PartnerSide::Plus) {
        require_bound(p, n);
        return hw(p) * n * (1.0 - 0.5 * g * g * (n + 1.0));
    }
    const auto top = max_partner_minus_index(p);
    if (top && n > *top)
        throw BoundIndexError("partner (-) level n = " + std::to_string(n) + " is not bound");
    return hw(p) * (n + 1.0) * (1.0 - 0.5 * g * g * (n + 2.0));
}

double partner_eigenfunction_minus(const ModelParams& p, int n, double x)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    if (!p.deformed())
        return hermite_function(n, x / p.sigma0()) / std::sqrt(p.sigma0());
    const auto top = max_partner_minus_index(p);
    if (n > *top)
        throw BoundIndexError("partner (-) level n = " + std::to_string(n) + " is not bound");
    return morse_state(p, n, 2.0 * p.s() - 2.0 * n - 3.0, x);
}

BosonicSplit bosonic_split(const ModelParams& p, const WaveFn& f)
{
    WaveFn h = apply_b_dagger(p, apply_b(p, f));
    h += 0.5 * f;
    h *= hw(p);
    const double k = 0.5 * hw(p) * p.gamma();
    WaveFn field = multiply(p, f, [k](double x) { return k * x; });
    return {std::move(h), std::move(field)};
}

WaveFn anticommutator_form(const ModelParams& p, const WaveFn& f)
{
    WaveFn out = apply_b(p, apply_b_dagger(p, f));
    out += apply_b_dagger(p, apply_b(p, f));
    out *= 0.5 * hw(p);
    return out;
}

std::pair<WaveFn, WaveFn> susy_matrix_action(const ModelParams& p, const WaveFn& f_up,
                                             const WaveFn& f_down)
{
    if (!(f_up.grid == f_down.grid))
        throw GridError("susy_matrix_action: components on different grids");
    WaveFn up = apply_b_dagger(p, apply_b(p, f_up));
    up *= hw(p);
    WaveFn down = apply_b(p, apply_b_dagger(p, f_down));
    down *= hw(p);
    return {std::move(up), std::move(down)};
}

double remainder(const ModelParams& p, double beta)
{
    const double g = p.gtilde();
    return hw(p) * (1.0 - 0.5 * g * g * (beta + 1.0));
}

void require_si_level(const ModelParams& p, int n, double beta)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    if (!p.deformed())
        return;
    const double mu = 2.0 * p.s() - 2.0 * n - beta;
    if (!(mu > 0.0))
        throw BoundIndexError("shape-invariant level (n = " + std::to_string(n) +
                              ", beta = " + std::to_string(beta) + ") needs 2s - 2n - beta > 0");
}

double si_energy(const ModelParams& p, int n, double beta)
{
    require_si_level(p, n, beta);
    const double g = p.gtilde();
    return hw(p) * n * (1.0 - 0.5 * g * g * (n + beta));
}

double si_energy_telescoped(const ModelParams& p, int n, double beta)
{
    double acc = 0.0;
    for (int j = 1; j <= n; ++j)
        acc += remainder(p, beta + 2.0 * (j - 1));
    return acc;
}

namespace {
// n!/(2s)^n Gamma(a)/Gamma(a - n), all in logs. a - n must be positive.
double gamma_ratio_form(const ModelParams& p, int n, double a)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    if (!p.deformed())
        return std::exp(ln_gamma(n + 1.0));
    if (!(a - n > 0.0))
        throw DomainError("deformed factorial: Gamma argument is not positive");
    const double s = p.s();
    return std::exp(ln_gamma(n + 1.0) - n * std::log(2.0 * s) + ln_gamma(a) - ln_gamma(a - n));
}
} // namespace

double deformed_factorial(const ModelParams& p, int n, double beta)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    if (p.deformed() && !(2.0 * p.s() - beta - n > 0.0))
        throw DomainError("deformed factorial: Gamma argument is not positive");
    const double g = p.gtilde();
    double acc = 1.0;
    for (int j = 1; j <= n; ++j)
        acc *= j * (1.0 - 0.5 * g * g * (j + beta));
    return acc;
}

double deformed_factorial_gamma(const ModelParams& p, int n, double beta)
{
    return gamma_ratio_form(p, n, p.deformed() ? 2.0 * p.s() - beta : 0.0);
}

double chain_factorial_gamma(const ModelParams& p, int n, double beta)
{
    return gamma_ratio_form(p, n, p.deformed() ? 2.0 * p.s() + 1.0 - beta - n : 0.0);
}

double chain_factorial(const ModelParams& p, int n, double beta)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    const double g = p.gtilde();
    double acc = 1.0;
    for (int k = 1; k <= n; ++k) {
        const int m = n - k + 1;
        const double b = beta + 2.0 * (k - 1);
        acc *= m * (1.0 - 0.5 * g * g * (m + b));
    }
    return acc;
}

double si_eigenfunction(const ModelParams& p, int n, double beta, double x)
{
    require_si_level(p, n, beta);
    if (!p.deformed())
        return hermite_function(n, x / p.sigma0()) / std::sqrt(p.sigma0());
    return morse_state(p, n, 2.0 * p.s() - 2.0 * n - beta, x);
}

double si_eigenfunction_derivative(const ModelParams& p, int n, double beta, double x)
{
    require_si_level(p, n, beta);
    if (!p.deformed()) {
        const double s0 = p.sigma0();
        const double xi = x / s0;
        double d = -std::sqrt((n + 1) / 2.0) * hermite_function(n + 1, xi);
        if (n > 0)
            d += std::sqrt(n / 2.0) * hermite_function(n - 1, xi);
        return d / (s0 * std::sqrt(s0));
    }
    return morse_state_derivative(p, n, 2.0 * p.s() - 2.0 * n - beta, x);
}

double ladder_coefficient(const ModelParams& p, int n, double beta, LadderDir dir)
{
    if (n < 0)
        throw BoundIndexError("level index must be >= 0");
    const double g = p.gtilde();
    const double r = (dir == LadderDir::Down) ? n * (1.0 - 0.5 * g * g * (n + beta))
                                              : (n + 1.0) * (1.0 - 0.5 * g * g * (n + 1.0 + beta));
    if (r < 0.0)
        throw BoundIndexError("ladder coefficient radicand is negative (level beyond the SI range)");
    return std::sqrt(r);
}

WaveFn apply_ladder(const ModelParams& p, const Grid& g, int n, double beta, LadderDir dir)
{
    ladder_coefficient(p, n, beta, dir);
    require_min_points(g);
    auto state = [&](int m, double b) {
        return sample(p, g, [&](double x) { return si_eigenfunction(p, m, b, x); });
    };
    if (dir == LadderDir::Up) {
        require_si_level(p, n + 1, beta);
        return apply_creation(p, beta, state(n, beta + 2.0));
    }
    require_si_level(p, n, beta);
    // a(beta) psi_{n,beta} lives in the beta+2 family; expand it there and relabel.
    const WaveFn h = apply_annihilation(p, beta, state(n, beta));
    WaveFn out = h;
    for (int m = 0; m <= n + 2; ++m) {
        if (p.deformed() && !(2.0 * p.s() - 2.0 * m - beta - 2.0 > 0.0))
            break;
        const WaveFn from = state(m, beta + 2.0);
        const cplx c = inner_product(p, from, h);
        out -= c * from;
        out += c * state(m, beta);
    }
    return out;
}

double apply_ladder_explicit(const ModelParams& p, int n, double beta, LadderDir dir, double x)
{
    if (!p.deformed())
        throw DomainError("apply_ladder_explicit: the closed expression needs gamma > 0");
    require_si_level(p, n, beta);
    const double pm = (dir == LadderDir::Up) ? 1.0 : -1.0;
    const double s = p.s();
    const double s0 = p.sigma0();
    const double u = p.jacobian(x);
    const double bracket = (2.0 * s + 1.0 - beta) / (2.0 * s - 2.0 * n - pm - beta) -
                           (2.0 * s - 2.0 * n + pm - beta) / (2.0 * s) / u;
    const double ratio = (2.0 * s - 2.0 * n - 2.0 * pm - beta) *
                         std::pow((2.0 * s - n - pm - beta) / (2.0 * s - n - beta), pm) /
                         (2.0 * s - 2.0 * n - beta);
    if (ratio < 0.0)
        throw BoundIndexError("apply_ladder_explicit: negative radicand");
    const double factor = std::sqrt(ratio) * (2.0 * s - 2.0 * n - pm - beta) / (2.0 * s);
    const double psi = si_eigenfunction(p, n, beta, x);
    const double dpsi = si_eigenfunction_derivative(p, n, beta, x);
    return (bracket / p.gamma() * psi - pm * s0 * s0 * dpsi) * factor / (std::sqrt(2.0) * s0);
}

Su11Report su11_check(const ModelParams& p, int n_max_test)
{
    Su11Report rep;
    rep.n_max_test = n_max_test;
    if (!p.deformed()) {
        rep.skipped = true;
        return rep;
    }
    if (n_max_test < 0)
        throw BoundIndexError("su11_check: n_max_test must be >= 0");
    const int N = n_max_test + 1;
    // L_+ psi_N needs psi_{N,3}.
    require_si_level(p, N, 3.0);

    const double s = p.s();
    const double g = p.gtilde();
    const double s0 = p.sigma0();
    const double k = 1.0 / (std::sqrt(2.0) * s0);
    const int dim = N + 1;
    const double lam = 2.0 * s - 2.0 * N - 3.0;

    std::vector<std::vector<double>> lp(dim, std::vector<double>(dim)), lm = lp;
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            // <psi_{m,1} | a^dagger(1) psi_{n,3}>
            lp[m][n] = integrate_full(p, lam, [&](double x) {
                const double u = 1.0 + p.gamma() * x;
                const double up = k * (x * si_eigenfunction(p, n, 3.0, x) -
                                       s0 * s0 * u * si_eigenfunction_derivative(p, n, 3.0, x));
                return si_eigenfunction(p, m, 1.0, x) * up;
            });
            // <psi_{m,3} | a(1) psi_{n,1}>, relabelled to psi_{m,1}
            lm[m][n] = integrate_full(p, lam, [&](double x) {
                const double u = 1.0 + p.gamma() * x;
                const double dn = k * ((x + p.gamma() * s0 * s0) * si_eigenfunction(p, n, 1.0, x) +
                                       s0 * s0 * u * si_eigenfunction_derivative(p, n, 1.0, x));
                return si_eigenfunction(p, m, 3.0, x) * dn;
            });
        }
    }
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) {
            const double cu = (m == n + 1) ? ladder_coefficient(p, n, 1.0, LadderDir::Up) : 0.0;
            const double cd = (m + 1 == n) ? ladder_coefficient(p, n, 1.0, LadderDir::Down) : 0.0;
            rep.coefficient_residual = std::max({rep.coefficient_residual, std::abs(lp[m][n] - cu),
                                                 std::abs(lm[m][n] - cd)});
        }

    auto mul = [dim](const auto& a, const auto& b) {
        std::vector<std::vector<double>> c(dim, std::vector<double>(dim, 0.0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int l = 0; l < dim; ++l)
                    c[i][j] += a[i][l] * b[l][j];
        return c;
    };
    rep.l0.resize(dim);
    for (int n = 0; n < dim; ++n)
        rep.l0[n] = 0.5 * (1.0 - g * g * (n + 1.0));

    const auto lmlp = mul(lm, lp);
    const auto lplm = mul(lp, lm);
    const double r2s = std::sqrt(2.0 * s);
    for (int sign : {-1, 1}) {
        double rc = 0.0, rp = 0.0, rm = 0.0;
        for (int i = 0; i <= n_max_test; ++i)
            for (int j = 0; j <= n_max_test; ++j) {
                const double m0i = sign * 2.0 * s * rep.l0[i];
                const double m0j = sign * 2.0 * s * rep.l0[j];
                const double diag = (i == j) ? 1.0 : 0.0;
                if (sign == -1)
                    rep.l_commutator_residual = std::max(rep.l_commutator_residual,
                                                         std::abs(lmlp[i][j] - lplm[i][j] - 2.0 * rep.l0[i] * diag));
                // [M+, M-] = 2s (L+L- - L-L+)
                rc = std::max(rc, std::abs(2.0 * s * (lplm[i][j] - lmlp[i][j]) - 2.0 * m0i * diag));
                rp = std::max(rp, std::abs((m0i - m0j) * r2s * lp[i][j] - r2s * lp[i][j]));
                rm = std::max(rm, std::abs((m0i - m0j) * r2s * lm[i][j] + r2s * lm[i][j]));
            }
        if (sign == -1) {
            rep.m_commutator_residual = rc;
            rep.m0_plus_residual = rp;
            rep.m0_minus_residual = rm;
        } else {
            rep.m_commutator_residual_plus_sign = rc;
            rep.m0_plus_residual_plus_sign = rp;
            rep.m0_minus_residual_plus_sign = rm;
        }
    }
    return rep;
}

} // namespace pdmosc
