#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "trio/errors.hpp"
#include "trio/oscillator_model.hpp"

namespace model = trio::model;

namespace {
const model::OscillatorParams kSample{1.0, 1.1, 1.2, 0.01, 0.02, 0.015};
}

TEST_CASE("potential matrix layout") {
    const model::PotentialMatrix k = model::build_potential_matrix(kSample);
    CHECK(k(0, 0) == doctest::Approx(1.0));
    CHECK(k(1, 1) == doctest::Approx(1.21));
    CHECK(k(2, 2) == doctest::Approx(1.44));
    CHECK(k(0, 1) == 0.01);
    CHECK(k(0, 2) == 0.02);
    CHECK(k(1, 2) == 0.015);
    CHECK((k - k.transpose()).norm() == 0.0);
}

TEST_CASE("uncoupled oscillators give the degenerate condition") {
    const model::OscillatorParams p{1.0, 1.3, 0.8, 0.0, 0.0, 0.0};
    const model::PhiRoots r = model::solve_phi_roots(p);
    CHECK(r.degenerate);
    CHECK(r.roots.empty());
    const model::EulerAngles identity{};
    CHECK(model::diagonalization_residual(p, identity) == 0.0);
}

TEST_CASE("sample parameters: roots satisfy the printed condition") {
    const model::PhiRoots r = model::solve_phi_roots(kSample);
    REQUIRE(!r.degenerate);
    REQUIRE(!r.roots.empty());
    for (double root : r.roots) {
        CHECK(std::abs(model::angle_condition_residual(
                  kSample, std::atan(root))) < 1e-10);
    }
}

TEST_CASE("sample parameters: every root diagonalizes") {
    const model::PhiRoots r = model::solve_phi_roots(kSample);
    REQUIRE(!r.roots.empty());
    const auto expected = model::potential_eigenvalues(kSample);
    for (double root : r.roots) {
        const model::DiagonalizationResult d =
            model::diagonalize_at_root(kSample, root);
        CHECK(d.residual < 1e-8);

        const Eigen::Matrix3d rot = model::rotation_matrix(d.angles);
        CHECK((rot.transpose() * rot - Eigen::Matrix3d::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-13);

        // The diagonal must be the spectrum of K, in some order.
        std::array<double, 3> diag = d.eigenvalues;
        std::sort(diag.begin(), diag.end());
        for (int i = 0; i < 3; ++i) {
            CHECK(diag[static_cast<std::size_t>(i)] ==
                  doctest::Approx(expected[static_cast<std::size_t>(i)])
                      .epsilon(1e-10));
        }
    }
}

TEST_CASE("random trios diagonalize to 1e-8") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> omega(0.7, 1.6);
    std::uniform_real_distribution<double> coupling(-0.06, 0.06);
    for (int trial = 0; trial < 40; ++trial) {
        model::OscillatorParams p;
        p.omega_x = omega(rng);
        p.omega_y = omega(rng);
        p.omega_z = omega(rng);
        p.j_xy = coupling(rng);
        p.j_xz = coupling(rng);
        p.j_yz = coupling(rng);
        const model::PhiRoots r = model::solve_phi_roots(p);
        if (r.degenerate) continue;
        REQUIRE(!r.roots.empty());
        double best = 1e300;
        for (double root : r.roots) {
            best = std::min(best,
                            model::diagonalize_at_root(p, root).residual);
        }
        CHECK(best < 1e-8);
    }
}

TEST_CASE("phi folding stays in (-pi/2, pi/2]") {
    for (double root : {-5.0, -0.3, 0.0, 0.4, 7.0}) {
        const double phi = model::phi_from_quintic_root(root);
        CHECK(phi > -M_PI_2);
        CHECK(phi <= M_PI_2);
        // tan(phi) = -1/root when root != 0
        if (root != 0.0) {
            CHECK(std::tan(phi) == doctest::Approx(-1.0 / root).epsilon(1e-12));
        }
    }
}

TEST_CASE("weak-coupling regime predicate") {
    CHECK(kSample.weak_regime());
    model::OscillatorParams strong = kSample;
    strong.j_xy = 1.5;
    CHECK(!strong.weak_regime());
}

TEST_CASE("weak coupling keeps the spectrum nearly degenerate") {
    // near-common frequency: the normal-mode spread is set by the couplings
    const model::OscillatorParams p{1.0, 1.0, 1.0, 0.02, -0.015, 0.01};
    const auto ev = model::potential_eigenvalues(p);
    const double jmax = 0.02;
    const double w2min = 1.0;
    CHECK((ev[2] - ev[0]) / ev[0] < 5.0 * jmax / w2min);
}

TEST_CASE("eigenenergy") {
    CHECK(model::eigenenergy({0, 0, 0}, 2.0) == doctest::Approx(3.0));
    CHECK(model::eigenenergy({1, 2, 3}, 1.0) == doctest::Approx(7.5));
    CHECK_THROWS_AS((void)model::eigenenergy({0, 0, 0}, 0.0),
                    trio::DomainError);
}

TEST_CASE("quintic coefficients vanish only for decoupled systems") {
    const auto a = model::quintic_coefficients(kSample);
    double amax = 0.0;
    for (double c : a) amax = std::max(amax, std::abs(c));
    CHECK(amax > 1e-8);
}
