#pragma once

namespace trio::angles {

// Largest |tan(theta)| for which every reduced-angle expression is real:
// the radicand 2 + mu^2 - mu^4 of mu_Phi is positive iff mu^2 < 2.
inline constexpr double kMuThetaDomain = 1.4142135623730951; // sqrt(2)
inline constexpr double kPoleGuard = 1e-6;

// Projective value num/den, kept as a pair so poles stay representable and
// the ratio is never evaluated as 0/0.
struct Ratio {
    double num = 0.0;
    double den = 0.0;
};

// mu_phi = (1 - mu*sqrt(2-mu^2)) / (mu^2 - 1) as a pole-free pair:
// the two algebraically equivalent forms
//   (mu^2 - 1) / (1 + mu*sqrt(2-mu^2))   and   (1 - mu*sqrt(2-mu^2)) / (mu^2 - 1)
// are selected by the sign of mu so numerator and denominator never vanish
// simultaneously.  The only true pole is mu = -1 (den -> 0, num -> 2).
Ratio mu_phi_ratio(double mu_theta);

// 1/mu_phi as a pair (numerator and denominator swapped).
Ratio g_ratio(double mu_theta);

// Scalar value; throws PoleError within kPoleGuard of mu_theta = -1 and
// DomainError for |mu_theta| >= sqrt(2).  Regular (value 0) at mu_theta = +1.
double mu_phi_from_theta(double mu_theta);

// mu_Phi = (1 - mu^2 - sqrt(3-mu^2)) / sqrt(2 + mu^2 - mu^4); even in mu.
// Throws DomainError when the radicand is not positive.
double mu_Phi_from_theta(double mu_theta);

struct ConsistencyResidual {
    double tan_theta;   // |tan(theta) + sin(phi) + cos(phi)|
    double tan_two_Phi; // |tan(2Phi) - sqrt(1-sin2phi)*sqrt(sin2phi+2)/sin2phi|
};

// Residuals of the two identities tying theta, Phi and phi together.
// tan(theta) = -sin(phi) - cos(phi) has two solution branches phi(+-theta),
// conjugate roots of mu_phi^2 (mu^2-1) - 2 mu_phi + (mu^2-1) = 0; the linear
// identity selects the branch phi(-mu_theta) while the entropy formulas use
// phi(+mu_theta).  The tan(2Phi) identity only involves sin(2phi), which is
// identical for both branches.
ConsistencyResidual check_angle_consistency(double mu_theta);

} // namespace trio::angles
