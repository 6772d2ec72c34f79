#include "trio/reduced_angles.hpp"

#include <cmath>

#include "trio/errors.hpp"

namespace trio::angles {

namespace {

void check_domain(double mu_theta) {
    if (!(mu_theta * mu_theta < 2.0)) {
        throw DomainError("reduced angles require |tan(theta)| < sqrt(2)");
    }
}

} // namespace

Ratio mu_phi_ratio(double mu_theta) {
    check_domain(mu_theta);
    const double r = std::sqrt(2.0 - mu_theta * mu_theta);
    if (mu_theta >= 0.0) {
        return {mu_theta * mu_theta - 1.0, 1.0 + mu_theta * r};
    }
    return {1.0 - mu_theta * r, mu_theta * mu_theta - 1.0};
}

Ratio g_ratio(double mu_theta) {
    const Ratio m = mu_phi_ratio(mu_theta);
    return {m.den, m.num};
}

double mu_phi_from_theta(double mu_theta) {
    const Ratio m = mu_phi_ratio(mu_theta);
    if (std::abs(mu_theta + 1.0) < kPoleGuard) {
        throw PoleError("mu_phi diverges at mu_theta = -1");
    }
    return m.num / m.den;
}

double mu_Phi_from_theta(double mu_theta) {
    const double t = mu_theta * mu_theta;
    const double radicand = 2.0 + t - t * t;
    if (!(radicand > 0.0)) {
        throw DomainError("mu_Phi radicand non-positive: |tan(theta)| >= sqrt(2)");
    }
    return (1.0 - t - std::sqrt(3.0 - t)) / std::sqrt(radicand);
}

ConsistencyResidual check_angle_consistency(double mu_theta) {
    ConsistencyResidual out{};

    // Linear identity, evaluated on its own branch phi(-mu_theta).
    const double mu_phi_conj = mu_phi_from_theta(-mu_theta);
    const double phi = std::atan(mu_phi_conj);
    out.tan_theta = std::abs(mu_theta + std::sin(phi) + std::cos(phi));

    // tan(2Phi) identity; sin(2phi) is branch independent, computed from the
    // projective pair for stability.
    const Ratio m = mu_phi_ratio(mu_theta);
    const double sin2phi = 2.0 * m.num * m.den / (m.num * m.num + m.den * m.den);
    const double mu_Phi = mu_Phi_from_theta(mu_theta);
    const double tan2Phi = 2.0 * mu_Phi / (1.0 - mu_Phi * mu_Phi);
    const double rhs =
        std::sqrt(1.0 - sin2phi) * std::sqrt(sin2phi + 2.0) / sin2phi;
    out.tan_two_Phi = std::abs(tan2Phi - rhs);
    return out;
}

} // namespace trio::angles
