#include "pdmosc/grid.hpp"

#include <algorithm>
#include <cmath>

#include "pdmosc/errors.hpp"

namespace pdmosc {

Grid::Grid(Coordinate coord, std::vector<double> points) : coord_(coord), points_(std::move(points))
{
    if (points_.size() < 2)
        throw GridError("Grid: need at least 2 points");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i] > points_[i - 1]))
            throw GridError("Grid: points must be strictly increasing");
    if (coord_ == Coordinate::Z && !(points_.front() > 0.0))
        throw GridError("Grid: z points must be positive");
}

Grid Grid::uniform(Coordinate coord, double a, double b, std::size_t n)
{
    if (n < 2 || !(a < b))
        throw GridError("Grid::uniform: need n >= 2 and a < b");
    std::vector<double> pts(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = a + h * static_cast<double>(i);
    pts.back() = b;
    return Grid(coord, std::move(pts));
}

double Grid::spacing() const
{
    const double h = (points_.back() - points_.front()) / static_cast<double>(points_.size() - 1);
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (std::abs((points_[i] - points_[i - 1]) - h) > 1e-8 * h)
            throw GridError("Grid: operation requires uniform spacing");
    return h;
}

std::vector<double> Grid::x_values(const ModelParams& p) const
{
    std::vector<double> xs(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        switch (coord_) {
        case Coordinate::X:
            p.jacobian(points_[i]);
            xs[i] = points_[i];
            break;
        case Coordinate::XGamma:
            xs[i] = p.xgamma_to_x(points_[i]);
            break;
        case Coordinate::Z:
            xs[i] = p.z_to_x(points_[i]);
            break;
        }
    }
    return xs;
}

std::vector<double> Grid::jacobian_values(const ModelParams& p) const
{
    std::vector<double> js(points_.size(), 1.0);
    if (!p.deformed())
        return js;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        switch (coord_) {
        case Coordinate::X:
            js[i] = p.jacobian(points_[i]);
            break;
        case Coordinate::XGamma:
            js[i] = std::exp(p.gamma() * points_[i]);
            break;
        case Coordinate::Z:
            js[i] = points_[i] / (2.0 * p.s());
            break;
        }
    }
    return js;
}

WaveFn::WaveFn(Grid g, std::vector<cplx> v, Convention c)
    : grid(std::move(g)), values(std::move(v)), convention(c)
{
    if (values.size() != grid.size())
        throw GridError("WaveFn: value count does not match grid");
}

void require_same_grid(const WaveFn& a, const WaveFn& b)
{
    if (!(a.grid == b.grid))
        throw GridError("wave functions live on different grids");
    if (a.convention != b.convention)
        throw ConventionError("wave functions use different density conventions");
}

void require_min_points(const Grid& g, std::size_t n)
{
    if (g.size() < n)
        throw GridError("grid too coarse: need at least " + std::to_string(n) + " points");
}

WaveFn& WaveFn::operator+=(const WaveFn& o)
{
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] += o.values[i];
    return *this;
}

WaveFn& WaveFn::operator-=(const WaveFn& o)
{
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] -= o.values[i];
    return *this;
}

WaveFn& WaveFn::operator*=(cplx a)
{
    for (auto& v : values)
        v *= a;
    return *this;
}

WaveFn operator+(WaveFn a, const WaveFn& b) { return a += b; }
WaveFn operator-(WaveFn a, const WaveFn& b) { return a -= b; }
WaveFn operator*(cplx a, WaveFn f) { return f *= a; }

Grid default_grid(const ModelParams& p, std::size_t points)
{
    const double s0 = p.sigma0();
    return Grid::uniform(Coordinate::XGamma, -8.0 * s0, 12.0 * s0, points);
}

Grid resolved_grid(const ModelParams& p, double mu_min, double h)
{
    const double s0 = p.sigma0();
    double left = 12.0 * s0;
    double right = 12.0 * s0;
    if (p.deformed()) {
        if (!(mu_min > 0.0))
            throw DomainError("resolved_grid: mu_min must be positive");
        left = std::max(left, 40.0 / (p.gamma() * mu_min));
        if (left > 2000.0 * s0)
            throw GridError("resolved_grid: state too weakly bound to resolve");
        right = std::min(right, std::log1p(16.0 * p.gamma() * s0) / p.gamma());
    }
    auto n = static_cast<std::size_t>(std::ceil((left + right) / (h * s0))) + 1;
    if (n % 2 == 0)
        ++n;
    return Grid::uniform(Coordinate::XGamma, -left, right, n);
}

std::vector<double> measure_weights(const ModelParams& p, const Grid& g, Convention c)
{
    const std::size_t n = g.size();
    const double h = g.spacing();
    std::vector<double> w(n, 0.0);
    if (n == 2) {
        w[0] = w[1] = 0.5 * h;
    } else {
        const std::size_t ns = (n % 2 == 1) ? n : n - 3;  // Simpson over the first ns points
        if (ns >= 3) {
            for (std::size_t i = 0; i < ns; ++i)
                w[i] = (i == 0 || i == ns - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            for (std::size_t i = 0; i < ns; ++i)
                w[i] *= h / 3.0;
        }
        if (ns != n) {
            const std::size_t b = n - 4;
            const double k = 3.0 * h / 8.0;
            w[b] += k;
            w[b + 1] += 3.0 * k;
            w[b + 2] += 3.0 * k;
            w[b + 3] += k;
        }
    }
    // dx/du for grid coordinate u, and d_gamma x = dx/(1+gamma x).
    const auto js = g.jacobian_values(p);
    for (std::size_t i = 0; i < n; ++i) {
        double dxdu = 1.0;
        if (g.coordinate() == Coordinate::XGamma)
            dxdu = js[i];
        else if (g.coordinate() == Coordinate::Z)
            dxdu = 1.0 / (2.0 * p.s() * p.gamma());
        w[i] *= (c == Convention::Psi) ? dxdu : dxdu / js[i];
    }
    return w;
}

std::vector<cplx> grid_derivative(const Grid& g, const std::vector<cplx>& f)
{
    const std::size_t n = g.size();
    require_min_points(g, 5);
    if (f.size() != n)
        throw GridError("grid_derivative: size mismatch");
    const double k = 1.0 / (12.0 * g.spacing());
    std::vector<cplx> d(n);
    d[0] = k * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = k * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = k * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    d[n - 2] = -k * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
    d[n - 1] = -k * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
    return d;
}

cplx inner_product(const ModelParams& p, const WaveFn& f, const WaveFn& g)
{
    require_same_grid(f, g);
    const auto w = measure_weights(p, f.grid, f.convention);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * std::conj(f.values[i]) * g.values[i];
    return acc;
}

double l2_norm(const ModelParams& p, const WaveFn& f)
{
    const auto w = measure_weights(p, f.grid, f.convention);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        acc += w[i] * std::norm(f.values[i]);
    return std::sqrt(acc);
}

namespace {
WaveFn rescale_by_jacobian(const ModelParams& p, const WaveFn& f, double power, Convention to)
{
    const auto js = f.grid.jacobian_values(p);
    WaveFn out = f;
    for (std::size_t i = 0; i < js.size(); ++i)
        out.values[i] *= std::pow(js[i], power);
    out.convention = to;
    return out;
}
} // namespace

WaveFn to_phi(const ModelParams& p, const WaveFn& psi)
{
    if (psi.convention != Convention::Psi)
        throw ConventionError("to_phi expects a Psi-convention function");
    return rescale_by_jacobian(p, psi, 0.5, Convention::Phi);
}

WaveFn to_psi(const ModelParams& p, const WaveFn& phi)
{
    if (phi.convention != Convention::Phi)
        throw ConventionError("to_psi expects a Phi-convention function");
    return rescale_by_jacobian(p, phi, -0.5, Convention::Psi);
}

} // namespace pdmosc
