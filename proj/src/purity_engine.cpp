#include "trio/purity_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trio/errors.hpp"
#include "trio/reduced_angles.hpp"

namespace trio::engine {

namespace {

using mps::TruncatedSeries;

// Variable order in the six-variable generating functions.
enum Var : int { U = 0, S = 1, V = 2, A = 3, B = 4, C = 5 };

TruncatedSeries one_plus(int var, const std::vector<int>& caps) {
    return TruncatedSeries::affine(1.0, {{var, 1.0}}, caps);
}

// c0 + c2 * x_i * x_j (the (1 -+ xy) factors).
TruncatedSeries pair_term(int vi, int vj, double c0, double c2,
                          const std::vector<int>& caps) {
    std::vector<int> e(caps.size(), 0);
    std::vector<std::pair<std::vector<int>, double>> terms;
    terms.emplace_back(e, c0);
    e[static_cast<std::size_t>(vi)] = 1;
    e[static_cast<std::size_t>(vj)] = 1;
    terms.emplace_back(e, c2);
    return TruncatedSeries::polynomial(terms, caps);
}

// The bracket shared by the Y and Z cross terms:
// a(c(u-v) + uv + 2u + 1) - cv(u+2) + u - c - v.
TruncatedSeries cross_bracket(const std::vector<int>& caps) {
    auto mono = [&caps](std::initializer_list<int> vars, double coef) {
        std::vector<int> e(caps.size(), 0);
        for (int v : vars) e[static_cast<std::size_t>(v)] += 1;
        return std::pair<std::vector<int>, double>(e, coef);
    };
    return TruncatedSeries::polynomial(
        {mono({A, C, U}, 1.0), mono({A, C, V}, -1.0), mono({A, U, V}, 1.0),
         mono({A, U}, 2.0), mono({A}, 1.0), mono({C, U, V}, -1.0),
         mono({C, V}, -2.0), mono({U}, 1.0), mono({C}, -1.0),
         mono({V}, -1.0)},
        caps);
}

struct AngleValues {
    double t;      // mu_theta^2
    double f;      // mu_Phi^2
    double mu_Phi;
    double gn, gd; // 1/mu_phi as a pole-free pair
    double mn, md; // mu_phi as a pole-free pair
};

AngleValues angle_values(double mu_theta) {
    AngleValues v{};
    v.t = mu_theta * mu_theta;
    v.mu_Phi = angles::mu_Phi_from_theta(mu_theta);
    v.f = v.mu_Phi * v.mu_Phi;
    const angles::Ratio g = angles::g_ratio(mu_theta);
    const angles::Ratio m = angles::mu_phi_ratio(mu_theta);
    v.gn = g.num;
    v.gd = g.den;
    v.mn = m.num;
    v.md = m.den;
    return v;
}

// Shared structure of the Y and Z denominators, with (pn, pd) standing for
// 1/mu_phi (Y) or mu_phi (Z) as a ratio; everything is multiplied by pd^2.
TruncatedSeries yz_denominator(const AngleValues& av, double pn, double pd,
                               const std::vector<int>& caps) {
    const double t = av.t, f = av.f;
    const double pn2 = pn * pn, pd2 = pd * pd;
    const TruncatedSeries ap1 = one_plus(A, caps), up1 = one_plus(U, caps);
    const TruncatedSeries bp1 = one_plus(B, caps), sp1 = one_plus(S, caps);
    const TruncatedSeries cp1 = one_plus(C, caps), vp1 = one_plus(V, caps);
    const TruncatedSeries cv_m1 = pair_term(C, V, -1.0, 1.0, caps);
    const TruncatedSeries au_m1 = pair_term(A, U, -1.0, 1.0, caps);
    const TruncatedSeries bs_m1 = pair_term(B, S, -1.0, 1.0, caps);

    TruncatedSeries den =
        (ap1 * bp1 * sp1 * up1 * cv_m1).scale(t * f * pn2 + (f + 1.0) * pd2);
    den = den + (bp1 * cp1 * sp1 * vp1 * au_m1)
                    .scale(f * pn2 + t * (f + 1.0) * pd2);
    den = den + (ap1 * cp1 * up1 * vp1 * bs_m1).scale((t + 1.0) * pn2);
    return den;
}

} // namespace

double numerator_constant(Bipartition bipartition, double mu_theta) {
    const AngleValues av = angle_values(mu_theta);
    switch (bipartition) {
        case Bipartition::X_vs_YZ:
            return (av.t + 1.0) * (av.f + 1.0);
        case Bipartition::Y_vs_XZ:
            return -(av.t + 1.0) * (av.gn * av.gn + av.gd * av.gd) *
                   (av.f + 1.0);
        case Bipartition::XY_vs_Z:
            return -(av.t + 1.0) * (av.mn * av.mn + av.md * av.md) *
                   (av.f + 1.0);
    }
    return 0.0;
}

mps::TruncatedSeries omega_denominator(Bipartition bipartition,
                                       double mu_theta,
                                       const std::vector<int>& caps) {
    const AngleValues av = angle_values(mu_theta);
    const double t = av.t, f = av.f;

    const TruncatedSeries ap1 = one_plus(A, caps), up1 = one_plus(U, caps);
    const TruncatedSeries bp1 = one_plus(B, caps), sp1 = one_plus(S, caps);
    const TruncatedSeries cp1 = one_plus(C, caps), vp1 = one_plus(V, caps);

    if (bipartition == Bipartition::X_vs_YZ) {
        const TruncatedSeries one_m_bs = pair_term(B, S, 1.0, -1.0, caps);
        const TruncatedSeries one_m_au = pair_term(A, U, 1.0, -1.0, caps);
        const TruncatedSeries one_m_cv = pair_term(C, V, 1.0, -1.0, caps);
        const TruncatedSeries omega1 =
            cp1 * vp1 *
            ((ap1 * up1 * one_m_bs).scale(f) + bp1 * sp1 * one_m_au);
        const TruncatedSeries omega2 =
            (ap1 * up1 * ((cp1 * vp1 * one_m_bs).scale(f) + bp1 * sp1 * one_m_cv))
                .scale(t);
        return omega1 + omega2;
    }

    const bool is_y = bipartition == Bipartition::Y_vs_XZ;
    const double pn = is_y ? av.gn : av.mn;
    const double pd = is_y ? av.gd : av.md;
    const double cross_coef = (is_y ? 2.0 : -2.0) * pn * pd * mu_theta *
                              av.mu_Phi * std::sqrt(f + 1.0);

    TruncatedSeries den = yz_denominator(av, pn, pd, caps);
    den = den + (bp1 * sp1 * cross_bracket(caps)).scale(cross_coef);
    return den;
}

double purity_mu(Bipartition bipartition, const FockState& state,
                 double mu_theta) {
    if (!state.valid()) throw OutOfCaps("Fock state out of supported range");
    if (state.total() == 0) {
        // The numerator equals the denominator's constant term identically,
        // so the ground-state coefficient is 1; evaluating the angle chain
        // still enforces the domain checks.
        (void)numerator_constant(bipartition, mu_theta);
        return 1.0;
    }
    const std::vector<int> caps = {state.n, state.m, state.l,
                                   state.n, state.m, state.l};
    const TruncatedSeries den = omega_denominator(bipartition, mu_theta, caps);
    // Use the constant term itself as the numerator (they agree identically);
    // this keeps the ratio exactly normalized at the origin.
    const double num = den.coeff({0, 0, 0, 0, 0, 0});
    const double p =
        num * den.reciprocal().coeff({state.n, state.m, state.l,
                                      state.n, state.m, state.l});
    if (!(p > 0.0 && p <= 1.0 + 1e-9)) {
        throw std::runtime_error("purity outside (0,1]: " + std::to_string(p));
    }
    return p;
}

double purity(Bipartition bipartition, const FockState& state, double theta) {
    return purity_mu(bipartition, state, std::tan(theta));
}

double linear_entropy(Bipartition bipartition, const FockState& state,
                      double theta) {
    return 1.0 - purity(bipartition, state, theta);
}

Tradeoff tradeoff(const FockState& state, double theta) {
    const double sx = linear_entropy(Bipartition::X_vs_YZ, state, theta);
    const double sy = linear_entropy(Bipartition::Y_vs_XZ, state, theta);
    const double sz = linear_entropy(Bipartition::XY_vs_Z, state, theta);
    return {sy + sz - sx, sx + sz - sy, sx + sy - sz};
}

double two_oscillator_purity_mu(int n, int l, double mu_theta) {
    if (n < 0 || l < 0 || n + l > 12) {
        throw OutOfCaps("two-oscillator state out of supported range");
    }
    const double t = mu_theta * mu_theta;
    if (n == 0 && l == 0) return 1.0;
    // Variables (u, v, a, c).
    const std::vector<int> caps = {n, l, n, l};
    const TruncatedSeries up1 = TruncatedSeries::affine(1.0, {{0, 1.0}}, caps);
    const TruncatedSeries vp1 = TruncatedSeries::affine(1.0, {{1, 1.0}}, caps);
    const TruncatedSeries ap1 = TruncatedSeries::affine(1.0, {{2, 1.0}}, caps);
    const TruncatedSeries cp1 = TruncatedSeries::affine(1.0, {{3, 1.0}}, caps);
    const TruncatedSeries au_m1 = TruncatedSeries::polynomial(
        {{{0, 0, 0, 0}, -1.0}, {{1, 0, 1, 0}, 1.0}}, caps);
    const TruncatedSeries cv_m1 = TruncatedSeries::polynomial(
        {{{0, 0, 0, 0}, -1.0}, {{0, 1, 0, 1}, 1.0}}, caps);
    const TruncatedSeries sigma =
        (cp1 * vp1 * au_m1).scale(t) + ap1 * up1 * cv_m1;
    // -(t+1) equals sigma's constant term; reuse it to normalize exactly.
    const double p =
        sigma.coeff({0, 0, 0, 0}) * sigma.reciprocal().coeff({n, l, n, l});
    if (!(p > 0.0 && p <= 1.0 + 1e-9)) {
        throw std::runtime_error("purity outside (0,1]: " + std::to_string(p));
    }
    return p;
}

double two_oscillator_purity(int n, int l, double theta) {
    return two_oscillator_purity_mu(n, l, std::tan(theta));
}

SweepRow sweep_row(const FockState& state, double theta) {
    SweepRow row;
    row.theta = theta;
    row.mu_theta = std::tan(theta);
    row.state = state;
    row.s_lx = 1.0 - purity_mu(Bipartition::X_vs_YZ, state, row.mu_theta);
    row.s_ly = 1.0 - purity_mu(Bipartition::Y_vs_XZ, state, row.mu_theta);
    row.s_lz = 1.0 - purity_mu(Bipartition::XY_vs_Z, state, row.mu_theta);
    row.m_x = row.s_ly + row.s_lz - row.s_lx;
    row.m_y = row.s_lx + row.s_lz - row.s_ly;
    row.m_z = row.s_lx + row.s_ly - row.s_lz;
    return row;
}

} // namespace trio::engine
