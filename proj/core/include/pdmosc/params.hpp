#pragma once

namespace pdmosc {

// Physical constants of the oscillator with mass m(x) = m0/(1+gamma x)^2.
class ModelParams {
public:
    ModelParams(double m0, double omega0, double hbar, double gamma);

    // m0 = omega0 = hbar = 1, so sigma0 = 1 and gamma == gamma*sigma0.
    static ModelParams natural(double gamma_sigma0);

    double m0() const { return m0_; }
    double omega0() const { return omega0_; }
    double hbar() const { return hbar_; }
    double gamma() const { return gamma_; }
    bool deformed() const { return gamma_ > 0.0; }

    double sigma0() const { return sigma0_; }
    double gtilde() const { return gamma_ * sigma0_; }
    double tau0() const;
    // 1/(gamma sigma0)^2. Throws DomainError when gamma == 0.
    double s() const;

    // Coordinate maps. All throw DomainError outside x > -1/gamma.
    double x_to_xgamma(double x) const;
    double xgamma_to_x(double xg) const;
    double x_to_z(double x) const;
    double z_to_x(double z) const;
    // 1 + gamma x, checked positive.
    double jacobian(double x) const;
    // Left edge of the physical domain (-infinity when gamma == 0).
    double left_edge() const;

private:
    double m0_;
    double omega0_;
    double hbar_;
    double gamma_;
    double sigma0_;
};

} // namespace pdmosc
