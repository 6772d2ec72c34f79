#pragma once

#include <vector>

#include "trio/series.hpp"
#include "trio/types.hpp"

namespace trio::engine {

// One sweep sample: entropies and trade-offs of a state at a mixing angle.
struct SweepRow {
    double theta = 0.0;
    double mu_theta = 0.0;
    FockState state;
    double s_lx = 0.0, s_ly = 0.0, s_lz = 0.0;
    double m_x = 0.0, m_y = 0.0, m_z = 0.0;
};

// Denominator of the purity generating function as a series in the six
// variables (u, s, v, a, b, c), truncated to the given per-variable caps.
// The Y and Z denominators are returned in a projectively rescaled form
// (multiplied by a positive mu_theta-dependent constant) that stays finite
// at |mu_theta| = 1; numerator_constant carries the matching scale so the
// ratio is unchanged.
mps::TruncatedSeries omega_denominator(Bipartition bipartition, double mu_theta,
                                       const std::vector<int>& caps);

// Numerator of the same generating function (a constant in the six variables),
// rescaled consistently with omega_denominator.
double numerator_constant(Bipartition bipartition, double mu_theta);

// Marginal purity P_a(n,m,l) at mixing angle theta: the Taylor coefficient of
// u^n s^m v^l a^n b^m c^l in numerator/denominator (the (n!m!l!)^-2 prefactor
// of the derivative form cancels the factorials of coefficient extraction).
double purity(Bipartition bipartition, const FockState& state, double theta);

// Same, parameterized directly by mu_theta = tan(theta).
double purity_mu(Bipartition bipartition, const FockState& state,
                 double mu_theta);

// S_La = 1 - P_a.
double linear_entropy(Bipartition bipartition, const FockState& state,
                      double theta);

struct Tradeoff {
    double m_x = 0.0, m_y = 0.0, m_z = 0.0;
};

// M_k = S_Li + S_Lj - S_Lk over the three bipartitions.
Tradeoff tradeoff(const FockState& state, double theta);

// Two-oscillator limit (Phi = phi = 0): purity of the (n,l) state from the
// four-variable generating function -(mu^2+1)/Sigma with
// Sigma = (c+1)(v+1)(au-1) mu^2 + (a+1)(u+1)(cv-1).
double two_oscillator_purity(int n, int l, double theta);
double two_oscillator_purity_mu(int n, int l, double mu_theta);

// All entropies and trade-offs of one state at one angle.
SweepRow sweep_row(const FockState& state, double theta);

} // namespace trio::engine
