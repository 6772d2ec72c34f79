#pragma once

#include <vector>

#include "trio/oscillator_model.hpp"
#include "trio/types.hpp"

namespace trio::oracle {

// Gauss-Hermite nodes/weights for weight exp(-t^2) on the real line.
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureGrid gauss_hermite(int order);

// Gauss-Laguerre nodes/weights for weight exp(-x) on [0, inf).
QuadratureGrid gauss_laguerre(int order);

// Single-mode Wigner function in Laguerre form,
// W_n = ((-1)^n / pi) exp(-xi) L_n(2 xi), xi = (vartheta^2 q^2 + p^2)/vartheta.
double wigner_single(int n, double q, double p, double vartheta = 1.0);

// Marginal purity by direct quadrature: the reduced position kernel of the
// kept lab coordinate is integrated numerically, purity = tr(rho^2).
// vartheta is the common normal-mode frequency (it must cancel; exposed only
// so tests can verify that).  Throws GridTooCoarse if the order-p and
// order-(p+4) evaluations disagree beyond 1e-7.
double quadrature_marginal_purity(const FockState& state,
                                  const model::EulerAngles& angles,
                                  Bipartition bipartition,
                                  double vartheta = 1.0);

// Marginal purity by composing the three planar rotations as two-mode
// beamsplitters on the Fock space of the lab modes.  Throws CutoffTooSmall
// if cutoff and cutoff+4 disagree beyond 1e-7.
double fock_network_purity(const FockState& state,
                           const model::EulerAngles& angles, int cutoff,
                           Bipartition bipartition);

// (2 pi)^3 * integral of W^2 over the six-dimensional phase space, via the
// product structure of the separable Wigner function; must be 1.
double wigner_normalization_check(const FockState& state,
                                  const model::EulerAngles& angles,
                                  double vartheta = 1.0);

// 2 pi * integral of W_n^2 over one phase plane (equals the single-mode
// purity, 1 for any Fock state).
double wigner_single_mode_purity(int n, double vartheta = 1.0);

// Integral of W_n over one phase plane (normalization, must be 1).
double wigner_single_mode_norm(int n, double vartheta = 1.0);

} // namespace trio::oracle
