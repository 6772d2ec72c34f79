#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "trio/types.hpp"

namespace trio::model {

// Frequencies (omega) and pairwise position-position couplings (J) of the
// three oscillators, hbar = m = 1.
struct OscillatorParams {
    double omega_x = 1.0;
    double omega_y = 1.0;
    double omega_z = 1.0;
    double j_xy = 0.0;
    double j_xz = 0.0;
    double j_yz = 0.0;

    bool valid() const { return omega_x > 0.0 && omega_y > 0.0 && omega_z > 0.0; }

    // max|J| < min(omega^2): couplings weak against every restoring force.
    bool weak_regime() const;
};

using PotentialMatrix = Eigen::Matrix3d;

// (theta, Phi, phi): R = R1(phi) * R2(Phi) * R3(theta).
struct EulerAngles {
    double theta = 0.0;
    double phi_cap = 0.0; // Phi
    double phi = 0.0;
};

struct DiagonalizationResult {
    EulerAngles angles;
    std::array<double, 3> eigenvalues{}; // diag of R^T K R, descending eigenvalues of K
    double residual = 0.0;               // max |off-diagonal| of R^T K R
};

struct PhiRoots {
    std::vector<double> roots; // real roots of the quintic, ascending
    bool degenerate = false;   // all coefficients vanish: condition holds identically
};

// Symmetric matrix with omega^2 on the diagonal and the J couplings off it.
PotentialMatrix build_potential_matrix(const OscillatorParams& params);

// Coefficients a0..a5 of the quintic angle condition sum a_n mu^n = 0.
std::array<double, 6> quintic_coefficients(const OscillatorParams& params);

// Real roots via balanced companion-matrix eigenvalues plus one Newton step.
// If every coefficient is below a scale-aware threshold the condition is
// satisfied identically and the degenerate flag is set instead.
PhiRoots solve_phi_roots(const OscillatorParams& params);

// A root mu of the quintic equals -cot(phi) of the diagonalizing angle, so
// phi = atan2(-1, mu) folded into (-pi/2, pi/2].  (The quintic variable is
// tan(phi + pi/2), a quarter turn away from the Euler angle in Eq-5
// conventions; see angle_condition_residual for the matching condition.)
double phi_from_quintic_root(double root);

// Residual of the scalar condition A13 (A12^2 - A23^2) - A23 A12 (A11 - A33)
// with A = R1(-phi) K R1(phi).  The quintic roots mu satisfy this residual
// at phi = atan(mu).
double angle_condition_residual(const OscillatorParams& params, double phi);

// Given phi, finish the diagonalization: Phi kills the (1,2) and (2,3)
// entries of A = R1(-phi) K R1(phi), then theta is the Jacobi angle of the
// remaining (1,3) block.  Branches are fixed by atan2 as documented inline.
EulerAngles angles_from_phi(const OscillatorParams& params, double phi);

// Explicit rotation R1(phi) R2(Phi) R3(theta).
Eigen::Matrix3d rotation_matrix(const EulerAngles& angles);

// max |off-diagonal| of R^T K R.
double diagonalization_residual(const OscillatorParams& params,
                                const EulerAngles& angles);

// Angles + residual + diagonal for one quintic root.
DiagonalizationResult diagonalize_at_root(const OscillatorParams& params,
                                          double root);

// Eigenvalues of K (ascending), computed independently of any angles.
std::array<double, 3> potential_eigenvalues(const OscillatorParams& params);

// vartheta * (n + m + l + 3/2) in the common-frequency regime.
double eigenenergy(const FockState& state, double theta_common);

} // namespace trio::model
