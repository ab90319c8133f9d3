#include "pdmosc/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace pdmosc::detail {

const GaussLegendre16& gauss_legendre_16()
{
    static const GaussLegendre16 table = [] {
        using G = boost::math::quadrature::gauss<double, 16>;
        const auto& a = G::abscissa();  // 8 non-negative nodes
        const auto& w = G::weights();
        GaussLegendre16 t{};
        for (std::size_t i = 0; i < 8; ++i) {
            t.nodes[7 - i] = -a[i];
            t.weights[7 - i] = w[i];
            t.nodes[8 + i] = a[i];
            t.weights[8 + i] = w[i];
        }
        return t;
    }();
    return table;
}

} // namespace pdmosc::detail
