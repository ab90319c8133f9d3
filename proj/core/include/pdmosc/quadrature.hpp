#pragma once

#include <array>
#include <cmath>
#include <type_traits>
#include <utility>

#include "pdmosc/errors.hpp"

namespace pdmosc {

namespace detail {
struct GaussLegendre16 {
    std::array<double, 16> nodes;   // on [-1, 1], ascending
    std::array<double, 16> weights;
};
const GaussLegendre16& gauss_legendre_16();

template <class F>
auto gl_panel(F& f, double a, double b)
{
    const auto& gl = gauss_legendre_16();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    using R = std::decay_t<decltype(f(a))>;
    R acc{};
    // Pair symmetric nodes so odd integrands cancel exactly.
    for (int i = 0; i < 8; ++i) {
        const double dx = h * gl.nodes[15 - i];
        acc += gl.weights[15 - i] * (f(c - dx) + f(c + dx));
    }
    return acc * h;
}
} // namespace detail

// Composite 16-node Gauss-Legendre on [a, b] with equal panels.
template <class F>
auto quadrature(F&& f, double a, double b, int panels)
{
    if (!(a < b))
        throw DomainError("quadrature: requires a < b");
    if (panels < 1)
        throw DomainError("quadrature: panels must be >= 1");
    const double w = (b - a) / panels;
    using R = std::decay_t<decltype(f(a))>;
    R acc{};
    for (int k = 0; k < panels; ++k) {
        const double lo = a + k * w;
        const double hi = (k + 1 == panels) ? b : a + (k + 1) * w;
        acc += detail::gl_panel(f, lo, hi);
    }
    return acc;
}

// Like quadrature(), but the first panel is split geometrically (halving
// `levels` times) towards a, for integrands with an algebraic singularity at a.
template <class F>
auto quadrature_graded(F&& f, double a, double b, int panels, int levels = 40)
{
    if (!(a < b))
        throw DomainError("quadrature_graded: requires a < b");
    if (panels < 1)
        throw DomainError("quadrature_graded: panels must be >= 1");
    const double w = (b - a) / panels;
    using R = std::decay_t<decltype(f(a))>;
    R acc{};
    double hi = a + w;
    for (int l = 0; l < levels; ++l) {
        const double lo = a + 0.5 * (hi - a);
        acc += detail::gl_panel(f, lo, hi);
        hi = lo;
    }
    acc += detail::gl_panel(f, a, hi);
    if (panels > 1)
        acc += quadrature(f, a + w, b, panels - 1);
    return acc;
}

} // namespace pdmosc
