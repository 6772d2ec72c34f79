#include <cmath>

#include <doctest.h>

#include "trio/errors.hpp"
#include "trio/reduced_angles.hpp"

namespace angles = trio::angles;

TEST_CASE("mu_Phi at mu_theta = 0") {
    CHECK(angles::mu_Phi_from_theta(0.0) ==
          doctest::Approx((1.0 - std::sqrt(3.0)) / std::sqrt(2.0))
              .epsilon(1e-14));
}

TEST_CASE("mu_Phi is even in mu_theta") {
    for (double mu : {0.2, 0.7, 1.1, 1.35}) {
        CHECK(angles::mu_Phi_from_theta(mu) ==
              doctest::Approx(angles::mu_Phi_from_theta(-mu)).epsilon(1e-14));
    }
}

TEST_CASE("mu_phi special values") {
    CHECK(angles::mu_phi_from_theta(0.0) == doctest::Approx(-1.0));
    CHECK(angles::mu_phi_from_theta(1.0) == doctest::Approx(0.0));
}

TEST_CASE("domain and pole errors") {
    CHECK_THROWS_AS((void)angles::mu_Phi_from_theta(angles::kMuThetaDomain),
                    trio::DomainError);
    CHECK_THROWS_AS((void)angles::mu_phi_from_theta(1.5), trio::DomainError);
    CHECK_THROWS_AS((void)angles::mu_phi_from_theta(-1.0), trio::PoleError);
    CHECK_THROWS_AS((void)angles::mu_phi_from_theta(-1.0 + 1e-8),
                    trio::PoleError);
}

TEST_CASE("projective pair solves the defining quadratic") {
    // mu_phi^2 (mu^2-1) - 2 mu_phi + (mu^2-1) = 0, in homogeneous form.
    for (double mu = -1.4; mu <= 1.4; mu += 0.05) {
        const angles::Ratio r = angles::mu_phi_ratio(mu);
        const double t = mu * mu;
        const double res = r.num * r.num * (t - 1.0) - 2.0 * r.num * r.den +
                           (t - 1.0) * r.den * r.den;
        const double scale = r.num * r.num + r.den * r.den;
        CHECK(std::abs(res) / scale < 1e-14);
        CHECK(scale > 0.5); // the pair never degenerates to (0, 0)
    }
}

TEST_CASE("g_ratio is the swapped pair") {
    const angles::Ratio m = angles::mu_phi_ratio(0.37);
    const angles::Ratio g = angles::g_ratio(0.37);
    CHECK(g.num == m.den);
    CHECK(g.den == m.num);
}

TEST_CASE("consistency identities hold across the domain") {
    // The linear tan(theta) identity pairs theta with the conjugate branch
    // phi(-mu_theta); it holds on (-0.99, 0.99) and changes sign past the
    // branch pole at mu_theta = +1, so the loop stays inside that interval.
    for (double mu = -0.95; mu <= 0.95; mu += 0.05) {
        const angles::ConsistencyResidual r =
            angles::check_angle_consistency(mu);
        CHECK(r.tan_theta < 1e-12);
        CHECK(r.tan_two_Phi < 1e-10);
    }
}
