#pragma once

namespace trio::closed {

// Single-excitation family: exactly one mode carries k quanta.
enum class Family { N, M, L }; // (k,0,0), (0,k,0), (0,0,k)

// Which double-excitation purity.
enum class DoubleState { S110, S101, S011 };

struct KappaSet {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double kappa3 = 0.0;
    double kappa4 = 0.0;
    double kappa5 = 0.0;
    double kappa6 = 0.0;
    double kappa7 = 0.0;
};

// x (x-1) ... (x-n+1); empty product = 1.
double falling_factorial(double x, int n);

// Jacobi polynomial P_n^{(alpha,beta)}(x) by the explicit finite sum with
// falling-factorial binomials; valid for negative integer alpha where the
// three-term recurrence breaks down.
double jacobi(int n, double alpha, double beta, double x);

// The seven auxiliary coefficients at a given mu_theta.  kappa2 and
// kappa3..kappa7 have poles at |mu_theta| = 1 (PoleError); the entropy
// functions below avoid them through scale-invariant combinations.
KappaSet kappa_set(double mu_theta);

// Closed-form linear entropies for single-excitation states.
double entropy_x_single(Family family, int k, double mu_theta);
double entropy_y_single(Family family, int k, double mu_theta);
double entropy_z_single(Family family, int k, double mu_theta);

// Explicit rational purities for the three double-excitation states of the
// x|yz bipartition.
double purity_x_double(DoubleState which, double mu_theta);

// Two-oscillator limit: purity of the (n,0) state,
// (-1)^n (1/(mu^2+1))^{2n} P_n^{(-2n-1,0)}(2 mu^4 - 1).
double two_osc_purity_n0(int n, double mu_theta);

} // namespace trio::closed
