#include "trio/verify.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "trio/closed_forms.hpp"
#include "trio/oracle.hpp"
#include "trio/oscillator_model.hpp"
#include "trio/purity_engine.hpp"
#include "trio/reduced_angles.hpp"
#include "trio/types.hpp"

namespace trio::verify {

namespace {

// Deterministic 21-point mu_theta grid avoiding the |mu|=1 pole guards.
std::vector<double> mu_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 20; ++i) {
        const double mu = -0.97 + 0.097 * i;
        if (std::abs(std::abs(mu) - 1.0) < 1e-3) continue;
        g.push_back(mu);
    }
    return g;
}

std::vector<FockState> states_up_to(int max_total) {
    std::vector<FockState> st;
    for (int n = 0; n <= max_total; ++n) {
        for (int m = 0; n + m <= max_total; ++m) {
            for (int l = 0; n + m + l <= max_total; ++l) st.push_back({n, m, l});
        }
    }
    return st;
}

model::EulerAngles angles_from_mu(double mu) {
    model::EulerAngles a;
    a.theta = std::atan(mu);
    a.phi_cap = std::atan(angles::mu_Phi_from_theta(mu));
    a.phi = std::atan(angles::mu_phi_from_theta(mu));
    return a;
}

PropertyResult check(const std::string& name, double tolerance,
                     const std::function<double()>& residual) {
    PropertyResult r;
    r.name = name;
    r.tolerance = tolerance;
    r.max_residual = residual();
    r.pass = std::isfinite(r.max_residual) && r.max_residual <= tolerance;
    return r;
}

double ground_state_residual() {
    double worst = 0.0;
    for (double mu : mu_grid()) {
        const double th = std::atan(mu);
        for (Bipartition b : {Bipartition::X_vs_YZ, Bipartition::Y_vs_XZ,
                              Bipartition::XY_vs_Z}) {
            worst = std::max(worst,
                             std::abs(engine::linear_entropy(b, {0, 0, 0}, th)));
        }
    }
    return worst;
}

double reflection_residual() {
    double worst = 0.0;
    for (const FockState& st : states_up_to(3)) {
        for (double mu : mu_grid()) {
            const double th = std::atan(mu);
            const double sy =
                engine::linear_entropy(Bipartition::Y_vs_XZ, st, th);
            const double sz =
                engine::linear_entropy(Bipartition::XY_vs_Z, st, -th);
            worst = std::max(worst, std::abs(sy - sz));
            const engine::Tradeoff tp = engine::tradeoff(st, th);
            const engine::Tradeoff tm = engine::tradeoff(st, -th);
            worst = std::max(worst, std::abs(tp.m_z - tm.m_y));
        }
    }
    return worst;
}

double closed_x_residual() {
    double worst = 0.0;
    for (int k = 1; k <= 4; ++k) {
        for (double mu : mu_grid()) {
            const double th = std::atan(mu);
            worst = std::max(
                worst,
                std::abs(engine::linear_entropy(Bipartition::X_vs_YZ,
                                                {k, 0, 0}, th) -
                         closed::entropy_x_single(closed::Family::N, k, mu)));
            worst = std::max(
                worst,
                std::abs(engine::linear_entropy(Bipartition::X_vs_YZ,
                                                {0, k, 0}, th) -
                         closed::entropy_x_single(closed::Family::M, k, mu)));
            worst = std::max(
                worst,
                std::abs(engine::linear_entropy(Bipartition::X_vs_YZ,
                                                {0, 0, k}, th) -
                         closed::entropy_x_single(closed::Family::L, k, mu)));
        }
    }
    return worst;
}

double closed_y_residual() {
    double worst = 0.0;
    for (int k = 1; k <= 4; ++k) {
        for (double mu : mu_grid()) {
            const double th = std::atan(mu);
            worst = std::max(
                worst,
                std::abs(engine::linear_entropy(Bipartition::Y_vs_XZ,
                                                {k, 0, 0}, th) -
                         closed::entropy_y_single(closed::Family::N, k, mu)));
            worst = std::max(
                worst,
                std::abs(engine::linear_entropy(Bipartition::Y_vs_XZ,
                                                {0, k, 0}, th) -
                         closed::entropy_y_single(closed::Family::M, k, mu)));
            worst = std::max(
                worst,
                std::abs(engine::linear_entropy(Bipartition::Y_vs_XZ,
                                                {0, 0, k}, th) -
                         closed::entropy_y_single(closed::Family::L, k, mu)));
        }
    }
    return worst;
}

double double_excitation_residual() {
    double worst = 0.0;
    for (double mu : mu_grid()) {
        worst = std::max(
            worst, std::abs(engine::purity_mu(Bipartition::X_vs_YZ, {1, 1, 0},
                                              mu) -
                            closed::purity_x_double(closed::DoubleState::S110,
                                                    mu)));
        worst = std::max(
            worst, std::abs(engine::purity_mu(Bipartition::X_vs_YZ, {1, 0, 1},
                                              mu) -
                            closed::purity_x_double(closed::DoubleState::S101,
                                                    mu)));
        worst = std::max(
            worst, std::abs(engine::purity_mu(Bipartition::X_vs_YZ, {0, 1, 1},
                                              mu) -
                            closed::purity_x_double(closed::DoubleState::S011,
                                                    mu)));
    }
    return worst;
}

double two_osc_symmetry_residual() {
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n) {
        for (int l = 0; l <= n; ++l) {
            for (double mu : {0.2, 0.7, 1.0, 1.3}) {
                worst = std::max(worst,
                                 std::abs(engine::two_oscillator_purity_mu(
                                              n, l, mu) -
                                          engine::two_oscillator_purity_mu(
                                              l, n, mu)));
            }
        }
    }
    return worst;
}

double two_osc_closed_residual() {
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (double mu : {0.0, 0.3, 0.8, 1.0, 1.2}) {
            worst = std::max(worst,
                             std::abs(engine::two_oscillator_purity_mu(n, 0, mu) -
                                      closed::two_osc_purity_n0(n, mu)));
        }
    }
    return worst;
}

double bounds_residual() {
    double worst = 0.0;
    for (const FockState& st : states_up_to(4)) {
        for (double mu : mu_grid()) {
            const double th = std::atan(mu);
            for (Bipartition b : {Bipartition::X_vs_YZ, Bipartition::Y_vs_XZ,
                                  Bipartition::XY_vs_Z}) {
                const double p = engine::purity(b, st, th);
                if (p <= 0.0) worst = std::max(worst, -p + 1e-30);
                if (p > 1.0) worst = std::max(worst, p - 1.0);
            }
        }
    }
    return worst;
}

double angle_consistency_residual() {
    double worst = 0.0;
    for (double mu : mu_grid()) {
        // the conjugate branch phi(-mu_theta) has its pole at mu_theta = +1
        if (std::abs(mu - 1.0) < 5e-2) continue;
        const angles::ConsistencyResidual r =
            angles::check_angle_consistency(mu);
        worst = std::max({worst, r.tan_theta, r.tan_two_Phi});
    }
    return worst;
}

double diagonalization_residual_check() {
    const model::OscillatorParams sets[] = {
        {1.0, 1.1, 1.2, 0.01, 0.02, 0.015},
        {1.3, 0.9, 1.05, -0.04, 0.03, 0.02},
        {2.0, 2.1, 1.9, 0.1, -0.08, 0.05},
    };
    double worst = 0.0;
    for (const model::OscillatorParams& p : sets) {
        const model::PhiRoots roots = model::solve_phi_roots(p);
        double best = 1e300;
        for (double r : roots.roots) {
            const model::DiagonalizationResult d =
                model::diagonalize_at_root(p, r);
            best = std::min(best, d.residual);
            const Eigen::Matrix3d rot = model::rotation_matrix(d.angles);
            const double ortho =
                (rot.transpose() * rot - Eigen::Matrix3d::Identity())
                    .cwiseAbs()
                    .maxCoeff();
            worst = std::max(worst, ortho);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double falling_factorial_residual() {
    double worst = 0.0;
    double nfact = 1.0;
    for (int n = 0; n <= 12; ++n) {
        if (n > 0) nfact *= n;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(closed::falling_factorial(-1.0, n) /
                                             nfact -
                                         sign));
    }
    return worst;
}

double quadrature_residual() {
    double worst = 0.0;
    for (const FockState& st : states_up_to(2)) {
        for (double mu : {0.3, 0.8}) {
            const model::EulerAngles a = angles_from_mu(mu);
            for (Bipartition b : {Bipartition::X_vs_YZ, Bipartition::Y_vs_XZ,
                                  Bipartition::XY_vs_Z}) {
                worst = std::max(
                    worst, std::abs(oracle::quadrature_marginal_purity(st, a, b) -
                                    engine::purity_mu(b, st, mu)));
            }
        }
    }
    return worst;
}

double fock_residual() {
    double worst = 0.0;
    for (const FockState& st : states_up_to(2)) {
        for (double mu : {0.3, 0.8}) {
            const model::EulerAngles a = angles_from_mu(mu);
            for (Bipartition b : {Bipartition::X_vs_YZ, Bipartition::Y_vs_XZ,
                                  Bipartition::XY_vs_Z}) {
                worst = std::max(
                    worst,
                    std::abs(oracle::fock_network_purity(st, a, st.total() + 6,
                                                         b) -
                             engine::purity_mu(b, st, mu)));
            }
        }
    }
    return worst;
}

double vartheta_independence_residual() {
    double worst = 0.0;
    const model::EulerAngles a = angles_from_mu(0.5);
    for (const FockState& st :
         {FockState{1, 0, 0}, FockState{1, 1, 0}, FockState{1, 1, 1}}) {
        for (Bipartition b : {Bipartition::X_vs_YZ, Bipartition::Y_vs_XZ}) {
            worst = std::max(
                worst,
                std::abs(oracle::quadrature_marginal_purity(st, a, b, 1.0) -
                         oracle::quadrature_marginal_purity(st, a, b, 2.0)));
        }
    }
    return worst;
}

double wigner_norm_residual() {
    double worst = 0.0;
    const model::EulerAngles a = angles_from_mu(0.4);
    for (const FockState& st :
         {FockState{0, 0, 0}, FockState{2, 1, 0}, FockState{1, 2, 3}}) {
        worst = std::max(worst,
                         std::abs(oracle::wigner_normalization_check(st, a) -
                                  1.0));
    }
    for (int n = 0; n <= 4; ++n) {
        worst = std::max(worst,
                         std::abs(oracle::wigner_single_mode_norm(n) - 1.0));
    }
    return worst;
}

double feature_location_residual() {
    // argmax of S_Lx(1,0,0) on a 401-point sweep vs mu_theta = (sqrt5-1)/2.
    const double lo = -1.0, hi = 1.0;
    double best_theta = lo, best_val = -1.0;
    for (int i = 0; i <= 400; ++i) {
        const double th = lo + (hi - lo) * i / 400.0;
        if (std::abs(std::tan(th)) >= angles::kMuThetaDomain - 1e-9) continue;
        const double s =
            engine::linear_entropy(Bipartition::X_vs_YZ, {1, 0, 0}, th);
        if (s > best_val) {
            best_val = s;
            best_theta = th;
        }
    }
    const double target = std::atan((std::sqrt(5.0) - 1.0) / 2.0);
    // S_Lx is even in theta (it depends only on tan(theta)^2), so the
    // maximum is attained at both signs of theta; compare magnitudes.
    return std::abs(std::abs(best_theta) - target);
}

} // namespace

std::vector<PropertyResult> run(Level level) {
    std::vector<PropertyResult> out;
    out.push_back(check("ground-state entropies vanish", 1e-12,
                        ground_state_residual));
    out.push_back(check("S_Ly(theta) = S_Lz(-theta) and M_z = M_y(-theta)",
                        1e-10, reflection_residual));
    out.push_back(check("engine matches closed-form S_Lx families", 1e-9,
                        closed_x_residual));
    out.push_back(check("engine matches closed-form S_Ly families", 1e-9,
                        closed_y_residual));
    out.push_back(check("engine matches printed double-excitation P_x", 1e-10,
                        double_excitation_residual));
    out.push_back(check("two-oscillator P(n,l) = P(l,n)", 1e-12,
                        two_osc_symmetry_residual));
    out.push_back(check("two-oscillator P(n,0) matches Jacobi form", 1e-10,
                        two_osc_closed_residual));
    out.push_back(check("purities within (0,1]", 0.0, bounds_residual));
    out.push_back(check("reduced-angle identities", 1e-10,
                        angle_consistency_residual));
    out.push_back(check("quintic roots diagonalize (orthogonal rotations)",
                        1e-8, diagonalization_residual_check));
    out.push_back(check("falling factorial (-1)^(n)/n! = (-1)^n", 1e-14,
                        falling_factorial_residual));
    out.push_back(check("argmax S_Lx(1,0,0) at mu = (sqrt(5)-1)/2",
                        2.0 / 400.0 + 1e-12, feature_location_residual));
    if (level == Level::Full) {
        out.push_back(check("engine matches quadrature oracle", 1e-5,
                            quadrature_residual));
        out.push_back(check("engine matches Fock-network oracle", 1e-5,
                            fock_residual));
        out.push_back(check("purity independent of common frequency", 1e-7,
                            vartheta_independence_residual));
        out.push_back(check("Wigner normalization", 1e-7,
                            wigner_norm_residual));
    }
    return out;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

} // namespace trio::verify
