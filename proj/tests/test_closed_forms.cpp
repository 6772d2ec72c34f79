#include <cmath>

#include <doctest.h>

#include "trio/closed_forms.hpp"
#include "trio/errors.hpp"
#include "trio/reduced_angles.hpp"

namespace closed = trio::closed;

namespace {
double binom(int n, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}
} // namespace

TEST_CASE("falling factorial") {
    CHECK(closed::falling_factorial(3.5, 0) == 1.0);
    CHECK(closed::falling_factorial(-1.0, 2) == 2.0);
    double nfact = 1.0;
    for (int n = 0; n <= 12; ++n) {
        if (n > 0) nfact *= n;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(closed::falling_factorial(-1.0, n) / nfact ==
              doctest::Approx(sign).epsilon(1e-14));
    }
}

TEST_CASE("jacobi basics") {
    CHECK(closed::jacobi(0, -1.0, 0.0, 0.3) == doctest::Approx(1.0));
    // P1^(-3,0)(x) = -(3+x)/2
    for (double x : {-1.0, 0.0, 0.5, 1.0}) {
        CHECK(closed::jacobi(1, -3.0, 0.0, x) ==
              doctest::Approx(-(3.0 + x) / 2.0).epsilon(1e-14));
    }
    // P_n^{(a,0)}(1) = C(n+a, n), here a = -2n-1 so the value is (-1)^n C(2n,n)
    for (int n = 0; n <= 8; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(closed::jacobi(n, -2.0 * n - 1.0, 0.0, 1.0) ==
              doctest::Approx(sign * binom(2 * n, n)).epsilon(1e-12));
    }
}

TEST_CASE("jacobi with alpha = -2n-1 is a degree-n polynomial") {
    const int n = 4;
    // finite differences of order n+1 on equispaced samples must vanish
    const double h = 0.25;
    for (double x0 : {-0.8, 0.1, 1.3}) {
        double diff = 0.0;
        for (int k = 0; k <= n + 1; ++k) {
            const double sign = ((n + 1 - k) % 2 == 0) ? 1.0 : -1.0;
            diff += sign * binom(n + 1, k) *
                    closed::jacobi(n, -2.0 * n - 1.0, 0.0, x0 + k * h);
        }
        CHECK(std::abs(diff) < 1e-8);
    }
}

TEST_CASE("kappa values at mu_theta = 0") {
    const closed::KappaSet k = closed::kappa_set(0.0);
    CHECK(k.kappa2 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(k.kappa1 ==
          doctest::Approx((2.0 + std::sqrt(3.0)) / std::sqrt(3.0))
              .epsilon(1e-14));
    const double f = std::pow(trio::angles::mu_Phi_from_theta(0.0), 2);
    // mu_phi(0) = -1, so the conjugate combination equals -1 and
    // kappa5 = (mu_Phi^2 + 1) * 2
    CHECK(k.kappa5 == doctest::Approx(2.0 * (f + 1.0)).epsilon(1e-12));
}

TEST_CASE("kappa poles near |mu_theta| = 1") {
    CHECK_THROWS_AS((void)closed::kappa_set(1.0), trio::PoleError);
    CHECK_THROWS_AS((void)closed::kappa_set(-1.0 + 1e-9), trio::PoleError);
    CHECK_NOTHROW((void)closed::kappa_set(0.9));
}

TEST_CASE("single-excitation entropies: ground state and bounds") {
    for (closed::Family fam :
         {closed::Family::N, closed::Family::M, closed::Family::L}) {
        CHECK(closed::entropy_x_single(fam, 0, 0.4) == 0.0);
        CHECK(closed::entropy_y_single(fam, 0, 0.4) == 0.0);
        for (int k = 1; k <= 5; ++k) {
            for (double mu = -1.3; mu <= 1.3; mu += 0.13) {
                const double sx = closed::entropy_x_single(fam, k, mu);
                const double sy = closed::entropy_y_single(fam, k, mu);
                CHECK(sx >= -1e-12);
                CHECK(sx < 1.0);
                CHECK(sy >= -1e-12);
                CHECK(sy < 1.0);
            }
        }
    }
}

TEST_CASE("x|yz separability of (0,0,l) at mu_theta = 0") {
    CHECK(std::abs(closed::entropy_x_single(closed::Family::L, 1, 0.0)) <
          1e-8);
    CHECK(std::abs(closed::entropy_x_single(closed::Family::L, 3, 0.0)) <
          1e-8);
}

TEST_CASE("z entropies are the y entropies reflected") {
    for (closed::Family fam :
         {closed::Family::N, closed::Family::M, closed::Family::L}) {
        for (double mu : {-0.7, -0.2, 0.33, 0.9}) {
            CHECK(closed::entropy_z_single(fam, 2, mu) ==
                  doctest::Approx(closed::entropy_y_single(fam, 2, -mu))
                      .epsilon(1e-14));
        }
    }
}

TEST_CASE("double-excitation purity values at mu_theta = 0.5") {
    CHECK(closed::purity_x_double(closed::DoubleState::S110, 0.5) ==
          doctest::Approx(0.363689906141).epsilon(1e-10));
    CHECK(closed::purity_x_double(closed::DoubleState::S101, 0.5) ==
          doctest::Approx(0.375429772425).epsilon(1e-10));
    CHECK(closed::purity_x_double(closed::DoubleState::S011, 0.5) ==
          doctest::Approx(0.510125856554).epsilon(1e-10));
}

TEST_CASE("(1,1,0) and (0,1,1) purities swap their mu_theta^0/mu_theta^4 roles") {
    // the printed rational functions exchange the two quartic factors
    for (double mu : {0.2, 0.55, 0.8}) {
        const double t = mu * mu;
        const double f = std::pow(trio::angles::mu_Phi_from_theta(mu), 2);
        const double q1 = (f * f + 1.0) * (f + 1.0) * (f + 1.0);
        const double q2 = f * f * f * f - 4.0 * f * f * f + 14.0 * f * f -
                          4.0 * f + 1.0;
        const double mid = 2.0 * t * f * (f * f * f - f * f + f + 3.0);
        const double den =
            (t + 1.0) * (t + 1.0) * std::pow(f + 1.0, 4);
        CHECK(closed::purity_x_double(closed::DoubleState::S110, mu) ==
              doctest::Approx((mid + t * t * q1 + q2) / den).epsilon(1e-13));
        CHECK(closed::purity_x_double(closed::DoubleState::S011, mu) ==
              doctest::Approx((mid + t * t * q2 + q1) / den).epsilon(1e-13));
    }
}

TEST_CASE("two-oscillator purity closed form") {
    CHECK(closed::two_osc_purity_n0(0, 0.7) == doctest::Approx(1.0));
    CHECK(closed::two_osc_purity_n0(1, 1.0) == doctest::Approx(0.5));
    // P(n,0) at mu=1: Jacobi argument 1, giving C(2n,n)/4^n
    for (int n = 0; n <= 6; ++n) {
        CHECK(closed::two_osc_purity_n0(n, 1.0) ==
              doctest::Approx(binom(2 * n, n) / std::pow(4.0, n))
                  .epsilon(1e-12));
    }
}
