#pragma once

namespace pdmosc {

// ln Gamma(x) for x > 0.
double ln_gamma(double x);

// L_n^{(nu)}(z) by forward three-term recurrence.
double assoc_laguerre(int n, double nu, double z);

// d/dz L_n^{(nu)}(z) = -L_{n-1}^{(nu+1)}(z).
double assoc_laguerre_derivative(int n, double nu, double z);

// Normalized Hermite function h_n(xi), int h_n^2 dxi = 1.
double hermite_function(int n, double xi);

} // namespace pdmosc
