#include "trio/closed_forms.hpp"

#include <cmath>

#include "trio/errors.hpp"
#include "trio/reduced_angles.hpp"

namespace trio::closed {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// Generalized binomial C(alpha + n, n - s) for real alpha.
double gen_binomial(double top, int k) {
    return falling_factorial(top, k) / std::tgamma(k + 1.0);
}

// Scaled Jacobi sum: q^k * P_k^{(-2k-1,0)}(x) with h = q (x-1)/2 and
// h + q = q (x+1)/2 supplied directly, so removable 0/0 arguments of the
// closed forms never materialize.
double scaled_jacobi(int k, double h, double h_plus_q) {
    const double alpha = -2.0 * k - 1.0;
    double sum = 0.0;
    for (int s = 0; s <= k; ++s) {
        sum += gen_binomial(alpha + k, k - s) * binomial(k, s) *
               std::pow(h, s) * std::pow(h_plus_q, k - s);
    }
    return sum;
}

struct YParts {
    double k3, k4, k5, k6, k7; // common positive scale (den of 1/mu_phi)^2
};

// kappa3..kappa7 multiplied by gd^2 where g = 1/mu_phi = gn/gd; all entropy
// expressions are invariant under this common rescaling and stay finite at
// |mu_theta| = 1 where the unscaled kappas blow up.
YParts y_parts(double mu_theta) {
    const angles::Ratio g = angles::g_ratio(mu_theta);
    const double gn = g.num, gd = g.den;
    const double t = mu_theta * mu_theta;
    const double mu_Phi = angles::mu_Phi_from_theta(mu_theta);
    const double f = mu_Phi * mu_Phi;
    const double sq = std::sqrt(f + 1.0);
    const double cross = 2.0 * gn * gd * mu_theta * mu_Phi * sq;

    YParts p{};
    p.k3 = (t + 1.0) * (f + 1.0) * (gn * gn + gd * gd);
    p.k4 = -gn * gn * (t * (f + 1.0) + 1.0) + cross - (f + 1.0) * gd * gd;
    p.k5 = (f + 1.0) * (gn * gn + gd * gd);
    p.k6 = -f * gn * gn - (f + 1.0) * gd * gd;
    p.k7 = -gn * gn * (t + f + 1.0) - t * (f + 1.0) * gd * gd - cross;
    return p;
}

// 1 - P for the (kappa_a, kappa_b) pair:
// P = (-1)^k ((a+b)/a)^{2k} P_k^{(-2k-1,0)}(2 b^2/(a+b)^2 - 1)
//   = (-1)^k [sum with h = -a (a + 2b), h+q = b^2] / a^{2k}.
double entropy_pair(int k, double a, double b) {
    if (k == 0) return 0.0;
    const double h = -a * (a + 2.0 * b);
    const double purity =
        ((k % 2 == 0) ? 1.0 : -1.0) * scaled_jacobi(k, h, b * b) /
        std::pow(a, 2 * k);
    return 1.0 - purity;
}

double nu_of(double mu_theta) { // 1/kappa2, regular on the whole domain
    const double t = mu_theta * mu_theta;
    if (!(t < 2.0)) throw DomainError("|tan(theta)| >= sqrt(2)");
    return (1.0 - t) / std::sqrt(3.0 - t);
}

double kappa1_of(double mu_theta) {
    const double t = mu_theta * mu_theta;
    if (!(t < 2.0)) throw DomainError("|tan(theta)| >= sqrt(2)");
    const double r = std::sqrt(3.0 - t);
    return (1.0 - t) * (r + 2.0) / (r * (1.0 + t));
}

} // namespace

double falling_factorial(double x, int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= x - i;
    return v;
}

double jacobi(int n, double alpha, double beta, double x) {
    double sum = 0.0;
    for (int s = 0; s <= n; ++s) {
        sum += gen_binomial(alpha + n, n - s) * gen_binomial(beta + n, s) *
               std::pow((x - 1.0) / 2.0, s) * std::pow((x + 1.0) / 2.0, n - s);
    }
    return sum;
}

KappaSet kappa_set(double mu_theta) {
    const double t = mu_theta * mu_theta;
    if (std::abs(std::abs(mu_theta) - 1.0) < angles::kPoleGuard) {
        throw PoleError("kappa2..kappa7 diverge at |mu_theta| = 1");
    }
    KappaSet k;
    k.kappa1 = kappa1_of(mu_theta);
    k.kappa2 = std::sqrt(3.0 - t) / (1.0 - t);

    const YParts p = y_parts(mu_theta);
    const angles::Ratio g = angles::g_ratio(mu_theta);
    const double gd2 = g.den * g.den;
    k.kappa3 = p.k3 / gd2;
    k.kappa4 = p.k4 / gd2;
    k.kappa5 = p.k5 / gd2;
    k.kappa6 = p.k6 / gd2;
    k.kappa7 = p.k7 / gd2;
    return k;
}

double entropy_x_single(Family family, int k, double mu_theta) {
    if (k == 0) return 0.0;
    const double k1 = kappa1_of(mu_theta);
    const double nu = nu_of(mu_theta);
    double purity = 0.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    switch (family) {
        case Family::N: {
            // q = (k1+1)^2, x - 1 = -16 (k1-1)/q  =>  h = -8 (k1-1)
            const double h = -8.0 * (k1 - 1.0);
            const double hq = (k1 + 1.0) * (k1 + 1.0) + h;
            purity = sign / std::pow(16.0, k) * scaled_jacobi(k, h, hq);
            break;
        }
        case Family::M: {
            // base (1 - nu)^2; argument (1 + 6 nu + nu^2)/(1-nu)^2
            const double h = 4.0 * nu;
            const double hq = (1.0 + nu) * (1.0 + nu);
            purity = sign / std::pow(4.0, k) * scaled_jacobi(k, h, hq);
            break;
        }
        case Family::L: {
            // base (k1 - 1 - 2 nu)^2; argument 16 (k1+1-2nu)/base + 1
            const double d = k1 - 1.0 - 2.0 * nu;
            const double h = 8.0 * (k1 + 1.0 - 2.0 * nu);
            const double hq = d * d + h;
            purity = sign / std::pow(16.0, k) * scaled_jacobi(k, h, hq);
            break;
        }
    }
    return 1.0 - purity;
}

double entropy_y_single(Family family, int k, double mu_theta) {
    const YParts p = y_parts(mu_theta);
    switch (family) {
        case Family::N: return entropy_pair(k, p.k3, p.k4);
        case Family::M: return entropy_pair(k, p.k5, p.k6);
        case Family::L: return entropy_pair(k, p.k3, p.k7);
    }
    return 0.0;
}

double entropy_z_single(Family family, int k, double mu_theta) {
    return entropy_y_single(family, k, -mu_theta);
}

double purity_x_double(DoubleState which, double mu_theta) {
    const double t = mu_theta * mu_theta;
    const double mu_Phi = angles::mu_Phi_from_theta(mu_theta);
    const double f = mu_Phi * mu_Phi;
    const double fp1 = f + 1.0;
    const double tp1 = t + 1.0;
    switch (which) {
        case DoubleState::S110:
            return (2.0 * t * (f * f * f - f * f + f + 3.0) * f +
                    t * t * fp1 * fp1 * (f * f + 1.0) + f * f * f * f -
                    4.0 * f * f * f + 14.0 * f * f - 4.0 * f + 1.0) /
                   (tp1 * tp1 * fp1 * fp1 * fp1 * fp1);
        case DoubleState::S101:
            return 2.0 / (fp1 * fp1 * fp1 * fp1) *
                       (-6.0 * t * fp1 / (tp1 * tp1) +
                        (t * t + 4.0 * t + 1.0) * fp1 * fp1 / (tp1 * tp1) +
                        12.0 * t * t / (tp1 * tp1 * tp1 * tp1) -
                        fp1 * fp1 * fp1) +
                   1.0;
        case DoubleState::S011:
            return (2.0 * t * f * (f * f * f - f * f + f + 3.0) +
                    t * t * (f * f * f * f - 4.0 * f * f * f + 14.0 * f * f -
                             4.0 * f + 1.0) +
                    fp1 * fp1 * (f * f + 1.0)) /
                   (tp1 * tp1 * fp1 * fp1 * fp1 * fp1);
    }
    return 0.0;
}

double two_osc_purity_n0(int n, double mu_theta) {
    const double t = mu_theta * mu_theta;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(1.0 / (t + 1.0), 2 * n) *
           jacobi(n, -2.0 * n - 1.0, 0.0, 2.0 * t * t - 1.0);
}

} // namespace trio::closed
