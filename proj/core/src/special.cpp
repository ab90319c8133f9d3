#include "pdmosc/special.hpp"

#include <cmath>
#include <numbers>

#include "pdmosc/errors.hpp"

namespace pdmosc {

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("ln_gamma: argument must be positive");
    return std::lgamma(x);
}

double assoc_laguerre(int n, double nu, double z)
{
    if (n < 0)
        return 0.0;
    double prev = 1.0;
    if (n == 0)
        return prev;
    double cur = 1.0 + nu - z;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + nu - z) * cur - (k + nu) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double assoc_laguerre_derivative(int n, double nu, double z)
{
    if (n <= 0)
        return 0.0;
    return -assoc_laguerre(n - 1, nu + 1.0, z);
}

double hermite_function(int n, double xi)
{
    if (n < 0)
        return 0.0;
    const double h0 = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(std::numbers::pi));
    if (n == 0)
        return h0;
    double prev = h0;
    double cur = std::sqrt(2.0) * xi * h0;
    for (int k = 1; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1.0)) * xi * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace pdmosc
