#include "trio/oracle.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "trio/errors.hpp"

namespace trio::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int n) {
    double v = 1.0;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// Laguerre polynomial L_n(x).
double laguerre(int n, double x) {
    double l0 = 1.0, l1 = 1.0 - x;
    if (n == 0) return l0;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 - x) * l1 - k * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

QuadratureGrid golub_welsch(const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& subdiag, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag);
    QuadratureGrid grid;
    const int n = static_cast<int>(diag.size());
    grid.nodes.resize(static_cast<std::size_t>(n));
    grid.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        grid.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return grid;
}

// Polynomial part of the eigenfunction, i.e. Psi with the isotropic Gaussian
// exp(-vartheta r^2 / 2) stripped; the Gaussian is reinserted through the
// quadrature weights.
double psi_polynomial(const FockState& st, double X, double Y, double Z,
                      double vartheta) {
    const double rt = std::sqrt(vartheta);
    const double norm =
        std::pow(vartheta / kPi, 0.75) /
        std::sqrt(std::pow(2.0, st.total()) * factorial(st.n) *
                  factorial(st.m) * factorial(st.l));
    return norm * hermite(st.n, rt * X) * hermite(st.m, rt * Y) *
           hermite(st.l, rt * Z);
}

double quadrature_purity_at_order(const FockState& state,
                                  const model::EulerAngles& angles,
                                  Bipartition bipartition, double vartheta,
                                  int order) {
    const QuadratureGrid gh = gauss_hermite(order);
    const int nq = order;
    const double rt = std::sqrt(vartheta);

    std::vector<double> node(static_cast<std::size_t>(nq));
    std::vector<double> weight(static_cast<std::size_t>(nq));
    for (int i = 0; i < nq; ++i) {
        node[static_cast<std::size_t>(i)] =
            gh.nodes[static_cast<std::size_t>(i)] / rt;
        weight[static_cast<std::size_t>(i)] =
            gh.weights[static_cast<std::size_t>(i)] / rt;
    }

    const Eigen::Matrix3d r = model::rotation_matrix(angles);
    // Lab coordinate kept by the marginal.
    const int keep = bipartition == Bipartition::X_vs_YZ
                         ? 0
                         : (bipartition == Bipartition::Y_vs_XZ ? 1 : 2);
    const int o1 = (keep + 1) % 3, o2 = (keep + 2) % 3;

    // G(i, (k,l)) = weighted polynomial part at (kept=node_i, others=node_k/l).
    Eigen::MatrixXd g(nq, nq * nq);
    Eigen::Vector3d lab;
    for (int i = 0; i < nq; ++i) {
        lab[keep] = node[static_cast<std::size_t>(i)];
        for (int k = 0; k < nq; ++k) {
            lab[o1] = node[static_cast<std::size_t>(k)];
            for (int l = 0; l < nq; ++l) {
                lab[o2] = node[static_cast<std::size_t>(l)];
                const Eigen::Vector3d rot = r.transpose() * lab;
                const double w =
                    std::sqrt(weight[static_cast<std::size_t>(k)] *
                              weight[static_cast<std::size_t>(l)]);
                g(i, k * nq + l) =
                    w * psi_polynomial(state, rot[0], rot[1], rot[2], vartheta);
            }
        }
    }

    const Eigen::MatrixXd rho = g * g.transpose();
    double purity = 0.0;
    for (int i = 0; i < nq; ++i) {
        for (int j = 0; j < nq; ++j) {
            purity += weight[static_cast<std::size_t>(i)] *
                      weight[static_cast<std::size_t>(j)] * rho(i, j) *
                      rho(i, j);
        }
    }
    return purity;
}

// Beamsplitter matrix element for old_i^dag = alpha new_i^dag + beta new_j^dag,
// old_j^dag = gamma new_i^dag + delta new_j^dag:
// A(p',r'|p,r) = sqrt(p'! r'! / (p! r!)) sum_k C(p,k) C(r,p'-k)
//                alpha^k beta^{p-k} gamma^{p'-k} delta^{r-p'+k}.
double bs_element(int pp, int rp, int p, int r, double alpha, double beta,
                  double gamma, double delta) {
    if (pp + rp != p + r) return 0.0;
    double sum = 0.0;
    for (int k = std::max(0, pp - r); k <= std::min(p, pp); ++k) {
        sum += binomial(p, k) * binomial(r, pp - k) * std::pow(alpha, k) *
               std::pow(beta, p - k) * std::pow(gamma, pp - k) *
               std::pow(delta, r - pp + k);
    }
    return std::sqrt(factorial(pp) * factorial(rp) /
                     (factorial(p) * factorial(r))) *
           sum;
}

// Apply a planar rotation acting on modes (mi, mj) to the amplitude tensor.
void apply_beamsplitter(std::vector<double>& amp, int dim, int mi, int mj,
                        double alpha, double beta, double gamma,
                        double delta) {
    std::vector<double> out(amp.size(), 0.0);
    const int strides[3] = {dim * dim, dim, 1};
    const int ms = 3 - mi - mj; // spectator mode
    for (int p = 0; p < dim; ++p) {
        for (int r = 0; r < dim; ++r) {
            for (int s = 0; s < dim; ++s) {
                const double a =
                    amp[static_cast<std::size_t>(p * strides[mi] +
                                                 r * strides[mj] +
                                                 s * strides[ms])];
                if (a == 0.0) continue;
                const int total = p + r;
                for (int pp = std::max(0, total - (dim - 1));
                     pp <= std::min(dim - 1, total); ++pp) {
                    const int rp = total - pp;
                    const double el =
                        bs_element(pp, rp, p, r, alpha, beta, gamma, delta);
                    out[static_cast<std::size_t>(pp * strides[mi] +
                                                 rp * strides[mj] +
                                                 s * strides[ms])] += a * el;
                }
            }
        }
    }
    amp.swap(out);
}

double fock_purity_at_cutoff(const FockState& state,
                             const model::EulerAngles& angles, int cutoff,
                             Bipartition bipartition) {
    const int dim = cutoff + 1;
    std::vector<double> amp(
        static_cast<std::size_t>(dim) * dim * dim, 0.0);
    amp[static_cast<std::size_t>(state.n * dim * dim + state.m * dim +
                                 state.l)] = 1.0;

    // b^dag = R3(-theta) R2(-Phi) R1(-phi) a^dag, applied factor by factor.
    const double ct = std::cos(angles.theta), st = std::sin(angles.theta);
    const double cp = std::cos(angles.phi_cap), sp = std::sin(angles.phi_cap);
    const double cf = std::cos(angles.phi), sf = std::sin(angles.phi);
    apply_beamsplitter(amp, dim, 0, 2, ct, -st, st, ct);  // R3(-theta)
    apply_beamsplitter(amp, dim, 0, 1, cp, -sp, sp, cp);  // R2(-Phi)
    apply_beamsplitter(amp, dim, 1, 2, cf, -sf, sf, cf);  // R1(-phi)

    const int keep = bipartition == Bipartition::X_vs_YZ
                         ? 0
                         : (bipartition == Bipartition::Y_vs_XZ ? 1 : 2);
    const int strides[3] = {dim * dim, dim, 1};
    const int o1 = (keep + 1) % 3, o2 = (keep + 2) % 3;

    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    for (int p = 0; p < dim; ++p) {
        for (int pp = 0; pp < dim; ++pp) {
            double sum = 0.0;
            for (int q = 0; q < dim; ++q) {
                for (int rr = 0; rr < dim; ++rr) {
                    sum += amp[static_cast<std::size_t>(
                               p * strides[keep] + q * strides[o1] +
                               rr * strides[o2])] *
                           amp[static_cast<std::size_t>(
                               pp * strides[keep] + q * strides[o1] +
                               rr * strides[o2])];
                }
            }
            rho(p, pp) = sum;
        }
    }
    return rho.squaredNorm();
}

} // namespace

QuadratureGrid gauss_hermite(int order) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(order - 1);
    for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(k / 2.0);
    return golub_welsch(diag, sub, std::sqrt(kPi));
}

QuadratureGrid gauss_laguerre(int order) {
    Eigen::VectorXd diag(order);
    Eigen::VectorXd sub(order - 1);
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < order; ++k) sub[k - 1] = static_cast<double>(k);
    return golub_welsch(diag, sub, 1.0);
}

double wigner_single(int n, double q, double p, double vartheta) {
    const double xi = (vartheta * vartheta * q * q + p * p) / vartheta;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign / kPi * std::exp(-xi) * laguerre(n, 2.0 * xi);
}

double quadrature_marginal_purity(const FockState& state,
                                  const model::EulerAngles& angles,
                                  Bipartition bipartition, double vartheta) {
    const int order = 2 * state.total() + 12;
    const double coarse = quadrature_purity_at_order(state, angles,
                                                     bipartition, vartheta,
                                                     order);
    const double fine = quadrature_purity_at_order(state, angles, bipartition,
                                                   vartheta, order + 4);
    if (std::abs(coarse - fine) > 1e-7) {
        throw GridTooCoarse("quadrature purity did not converge");
    }
    return fine;
}

double fock_network_purity(const FockState& state,
                           const model::EulerAngles& angles, int cutoff,
                           Bipartition bipartition) {
    const double coarse =
        fock_purity_at_cutoff(state, angles, cutoff, bipartition);
    const double fine =
        fock_purity_at_cutoff(state, angles, cutoff + 4, bipartition);
    if (std::abs(coarse - fine) > 1e-7) {
        throw CutoffTooSmall("Fock-network purity did not converge");
    }
    return fine;
}

double wigner_single_mode_purity(int n, double vartheta) {
    // 2 pi int W_n^2 dq dp = int_0^inf e^{-x} L_n(x)^2 dx with x = 2 xi;
    // the phase-plane area element is dq dp = (pi / vartheta) * vartheta dxi.
    (void)vartheta; // cancels exactly in the substitution
    const QuadratureGrid gl = gauss_laguerre(n + 6);
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double l = laguerre(n, gl.nodes[i]);
        sum += gl.weights[i] * l * l;
    }
    return sum;
}

double wigner_single_mode_norm(int n, double vartheta) {
    // int W_n dq dp = (-1)^n int_0^inf e^{-xi} L_n(2 xi) dxi.
    (void)vartheta;
    const QuadratureGrid gl = gauss_laguerre(n + 6);
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        sum += gl.weights[i] * laguerre(n, 2.0 * gl.nodes[i]);
    }
    return ((n % 2 == 0) ? 1.0 : -1.0) * sum;
}

double wigner_normalization_check(const FockState& state,
                                  const model::EulerAngles& angles,
                                  double vartheta) {
    (void)angles; // the rotation has unit Jacobian on phase space
    return wigner_single_mode_purity(state.n, vartheta) *
           wigner_single_mode_purity(state.m, vartheta) *
           wigner_single_mode_purity(state.l, vartheta);
}

} // namespace trio::oracle
