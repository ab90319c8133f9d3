#include "pdmosc/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pdmosc/errors.hpp"

namespace pdmosc {

ModelParams::ModelParams(double m0, double omega0, double hbar, double gamma)
    : m0_(m0), omega0_(omega0), hbar_(hbar), gamma_(gamma)
{
    if (!(m0 > 0.0) || !(omega0 > 0.0) || !(hbar > 0.0))
        throw DomainError("ModelParams: m0, omega0, hbar must be positive");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw DomainError("ModelParams: gamma must be finite and >= 0");
    sigma0_ = std::sqrt(hbar / (m0 * omega0));
}

ModelParams ModelParams::natural(double gamma_sigma0)
{
    return ModelParams(1.0, 1.0, 1.0, gamma_sigma0);
}

double ModelParams::tau0() const { return 2.0 * std::numbers::pi / omega0_; }

double ModelParams::s() const
{
    if (!deformed())
        throw DomainError("s = 1/(gamma sigma0)^2 is undefined for gamma = 0");
    const double g = gtilde();
    return 1.0 / (g * g);
}

double ModelParams::jacobian(double x) const
{
    const double u = 1.0 + gamma_ * x;
    if (!(u > 0.0))
        throw DomainError("x must satisfy 1 + gamma x > 0 (got x = " + std::to_string(x) + ")");
    return u;
}

double ModelParams::x_to_xgamma(double x) const
{
    if (!deformed())
        return x;
    jacobian(x);
    return std::log1p(gamma_ * x) / gamma_;
}

double ModelParams::xgamma_to_x(double xg) const
{
    if (!deformed())
        return xg;
    return std::expm1(gamma_ * xg) / gamma_;
}

double ModelParams::x_to_z(double x) const { return 2.0 * s() * jacobian(x); }

double ModelParams::z_to_x(double z) const
{
    if (!(z > 0.0))
        throw DomainError("z must be positive");
    return (z / (2.0 * s()) - 1.0) / gamma_;
}

double ModelParams::left_edge() const
{
    if (!deformed())
        return -std::numeric_limits<double>::infinity();
    return -1.0 / gamma_;
}

} // namespace pdmosc
