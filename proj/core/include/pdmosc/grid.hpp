#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "pdmosc/params.hpp"

namespace pdmosc {

using cplx = std::complex<double>;

enum class Coordinate { X, XGamma, Z };

// Uniformly spaced points in one of the three coordinates.
class Grid {
public:
    Grid(Coordinate coord, std::vector<double> points);
    static Grid uniform(Coordinate coord, double a, double b, std::size_t n);

    Coordinate coordinate() const { return coord_; }
    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double spacing() const;
    double operator[](std::size_t i) const { return points_[i]; }

    // Physical x at every grid point. Throws DomainError if a point is outside the domain.
    std::vector<double> x_values(const ModelParams& p) const;
    // 1 + gamma x at every grid point, computed without cancellation near x = -1/gamma.
    std::vector<double> jacobian_values(const ModelParams& p) const;

    bool operator==(const Grid& o) const { return coord_ == o.coord_ && points_ == o.points_; }

private:
    Coordinate coord_;
    std::vector<double> points_;
};

// PSI: plain measure dx. PHI: deformed measure d_gamma x = dx/(1+gamma x).
enum class Convention { Psi, Phi };

struct WaveFn {
    Grid grid;
    std::vector<cplx> values;
    Convention convention = Convention::Psi;

    WaveFn(Grid g, std::vector<cplx> v, Convention c = Convention::Psi);

    WaveFn& operator+=(const WaveFn& o);
    WaveFn& operator-=(const WaveFn& o);
    WaveFn& operator*=(cplx a);
};

WaveFn operator+(WaveFn a, const WaveFn& b);
WaveFn operator-(WaveFn a, const WaveFn& b);
WaveFn operator*(cplx a, WaveFn f);

// Sample a real or complex function of x onto a grid.
template <class F>
WaveFn sample(const ModelParams& p, const Grid& g, F&& f, Convention c = Convention::Psi)
{
    const auto xs = g.x_values(p);
    std::vector<cplx> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        v[i] = cplx(f(xs[i]));
    return WaveFn(g, std::move(v), c);
}

// 4001 points, x_gamma in [-8 sigma0, 12 sigma0]. points overrides the count.
Grid default_grid(const ModelParams& p, std::size_t points = 4001);

// x_gamma grid whose left edge is far enough for states decaying like
// z^{mu/2} (in the PHI picture) to reach e^{-20}; spacing about h*sigma0.
Grid resolved_grid(const ModelParams& p, double mu_min, double h = 0.01);

// Quadrature weights such that sum w_i f_i approximates the integral of f
// in the measure of `c` (dx for Psi, d_gamma x for Phi). Composite Simpson,
// with a 3/8 panel at the end when the point count is even.
std::vector<double> measure_weights(const ModelParams& p, const Grid& g, Convention c);

// Derivative with respect to the grid coordinate: 5-point central stencil,
// 4th-order one-sided stencils on the two outermost points at each end.
std::vector<cplx> grid_derivative(const Grid& g, const std::vector<cplx>& f);

// Inner product <f, g> in the convention's measure. Throws on mismatch.
cplx inner_product(const ModelParams& p, const WaveFn& f, const WaveFn& g);
double l2_norm(const ModelParams& p, const WaveFn& f);

// phi = sqrt(1+gamma x) psi and back.
WaveFn to_phi(const ModelParams& p, const WaveFn& psi);
WaveFn to_psi(const ModelParams& p, const WaveFn& phi);

void require_same_grid(const WaveFn& a, const WaveFn& b);
void require_min_points(const Grid& g, std::size_t n = 16);

} // namespace pdmosc
