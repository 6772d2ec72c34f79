#include "trio/oscillator_model.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "trio/errors.hpp"

namespace trio::model {

namespace {

Eigen::Matrix3d r1(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    Eigen::Matrix3d m;
    m << 1, 0, 0,
         0, c, s,
         0, -s, c;
    return m;
}

Eigen::Matrix3d r2(double Phi) {
    const double c = std::cos(Phi), s = std::sin(Phi);
    Eigen::Matrix3d m;
    m << c, s, 0,
        -s, c, 0,
         0, 0, 1;
    return m;
}

Eigen::Matrix3d r3(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Eigen::Matrix3d m;
    m << c, 0, s,
         0, 1, 0,
        -s, 0, c;
    return m;
}

double coefficient_scale(const OscillatorParams& p) {
    const double s = std::max({p.omega_x * p.omega_x, p.omega_y * p.omega_y,
                               p.omega_z * p.omega_z, std::abs(p.j_xy),
                               std::abs(p.j_xz), std::abs(p.j_yz)});
    return s * s * s;
}

double eval_poly(const std::array<double, 6>& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

double eval_poly_deriv(const std::array<double, 6>& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 1;) v = v * x + static_cast<double>(i) * a[i];
    return v;
}

} // namespace

bool OscillatorParams::weak_regime() const {
    const double jmax =
        std::max({std::abs(j_xy), std::abs(j_xz), std::abs(j_yz)});
    const double w2min = std::min({omega_x * omega_x, omega_y * omega_y,
                                   omega_z * omega_z});
    return jmax < w2min;
}

PotentialMatrix build_potential_matrix(const OscillatorParams& p) {
    PotentialMatrix k;
    k << p.omega_x * p.omega_x, p.j_xy, p.j_xz,
         p.j_xy, p.omega_y * p.omega_y, p.j_yz,
         p.j_xz, p.j_yz, p.omega_z * p.omega_z;
    return k;
}

std::array<double, 6> quintic_coefficients(const OscillatorParams& p) {
    const double wx2 = p.omega_x * p.omega_x;
    const double wy2 = p.omega_y * p.omega_y;
    const double wz2 = p.omega_z * p.omega_z;
    const double jxy = p.j_xy, jxz = p.j_xz, jyz = p.j_yz;
    std::array<double, 6> a{};
    a[0] = jxy * jyz * (wz2 - wx2) + jxy * jxy * jxz - jxz * jyz * jyz;
    a[1] = jxy * (-2 * jxz * jxz + jyz * jyz + (wx2 - wz2) * (wz2 - wy2)) +
           jxz * jyz * (wx2 - 2 * wy2 + wz2) + jxy * jxy * jxy;
    a[2] = jxz * (wx2 - wy2) * (wy2 - wz2) - jxy * jxy * jxz +
           jxy * jyz * (wy2 - wz2) + jxz * jxz * jxz;
    a[3] = -jxy * (jxz * jxz + (wx2 - wz2) * (wy2 - wz2)) + jxy * jxy * jxy +
           jxz * jyz * (wz2 - wy2);
    a[4] = jxy * jyz * (wx2 + wy2 - 2 * wz2) +
           jxz * (jxz * jxz + jyz * jyz + (wx2 - wy2) * (wy2 - wz2)) -
           2 * jxy * jxy * jxz;
    a[5] = jxz * jyz * (wy2 - wx2) + jxy * (jxz * jxz - jyz * jyz);
    return a;
}

PhiRoots solve_phi_roots(const OscillatorParams& params) {
    const std::array<double, 6> a = quintic_coefficients(params);
    double amax = 0.0;
    for (double c : a) amax = std::max(amax, std::abs(c));

    PhiRoots out;
    if (amax < 1e-12 * coefficient_scale(params)) {
        out.degenerate = true;
        return out;
    }

    // Effective degree: drop leading coefficients that are negligible
    // against the largest one, otherwise the companion matrix blows up.
    int deg = 5;
    while (deg > 0 && std::abs(a[static_cast<std::size_t>(deg)]) < 1e-14 * amax) --deg;
    if (deg == 0) return out; // nonzero constant: no roots

    const auto lead = a[static_cast<std::size_t>(deg)];
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -a[static_cast<std::size_t>(i)] / lead;

    const Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    for (int i = 0; i < deg; ++i) {
        const std::complex<double> z = es.eigenvalues()[i];
        if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real()))) continue;
        double x = z.real();
        const double d = eval_poly_deriv(a, x);
        if (d != 0.0) x -= eval_poly(a, x) / d; // one Newton polish
        out.roots.push_back(x);
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

double phi_from_quintic_root(double root) {
    double phi = std::atan2(-1.0, root); // in (-pi, 0)
    if (phi <= -M_PI_2) phi += M_PI;
    return phi;
}

double angle_condition_residual(const OscillatorParams& params, double phi) {
    const Eigen::Matrix3d k = build_potential_matrix(params);
    const Eigen::Matrix3d a = r1(-phi) * k * r1(phi);
    return a(0, 2) * (a(0, 1) * a(0, 1) - a(1, 2) * a(1, 2)) -
           a(1, 2) * a(0, 1) * (a(0, 0) - a(2, 2));
}

EulerAngles angles_from_phi(const OscillatorParams& params, double phi) {
    const Eigen::Matrix3d k = build_potential_matrix(params);
    const Eigen::Matrix3d a = r1(-phi) * k * r1(phi);

    // A = R2(Phi) B R2(-Phi) with B12 = B23 = 0 forces
    // A13 = cos(Phi) B13 and A23 = -sin(Phi) B13.
    EulerAngles out;
    out.phi = phi;
    const double mag = std::hypot(a(0, 2), a(1, 2));
    out.phi_cap = (mag > 1e-300) ? std::atan2(-a(1, 2), a(0, 2)) : 0.0;

    // B = R2(-Phi) A R2(Phi) is block structured; theta is the Jacobi angle
    // of its (1,3) block: tan(2 theta) = 2 B13 / (B33 - B11).
    const Eigen::Matrix3d b = r2(out.phi_cap).transpose() * a * r2(out.phi_cap);
    if (b(0, 2) == 0.0 && b(2, 2) == b(0, 0)) {
        out.theta = 0.0;
    } else {
        out.theta = 0.5 * std::atan2(2.0 * b(0, 2), b(2, 2) - b(0, 0));
    }
    return out;
}

Eigen::Matrix3d rotation_matrix(const EulerAngles& angles) {
    return r1(angles.phi) * r2(angles.phi_cap) * r3(angles.theta);
}

double diagonalization_residual(const OscillatorParams& params,
                                const EulerAngles& angles) {
    const Eigen::Matrix3d k = build_potential_matrix(params);
    const Eigen::Matrix3d r = rotation_matrix(angles);
    const Eigen::Matrix3d s = r.transpose() * k * r;
    return std::max({std::abs(s(0, 1)), std::abs(s(0, 2)), std::abs(s(1, 2))});
}

DiagonalizationResult diagonalize_at_root(const OscillatorParams& params,
                                          double root) {
    DiagonalizationResult res;
    res.angles = angles_from_phi(params, phi_from_quintic_root(root));
    const Eigen::Matrix3d k = build_potential_matrix(params);
    const Eigen::Matrix3d r = rotation_matrix(res.angles);
    const Eigen::Matrix3d s = r.transpose() * k * r;
    res.eigenvalues = {s(0, 0), s(1, 1), s(2, 2)};
    res.residual = std::max({std::abs(s(0, 1)), std::abs(s(0, 2)),
                             std::abs(s(1, 2))});
    return res;
}

std::array<double, 3> potential_eigenvalues(const OscillatorParams& params) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(
        build_potential_matrix(params));
    const auto& v = es.eigenvalues();
    return {v[0], v[1], v[2]};
}

double eigenenergy(const FockState& state, double theta_common) {
    if (!(theta_common > 0.0)) {
        throw DomainError("eigenenergy requires a positive common frequency");
    }
    return theta_common * (state.total() + 1.5);
}

} // namespace trio::model
