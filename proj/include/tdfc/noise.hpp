#pragma once

#include "tdfc/cluster_graph.hpp"
#include "tdfc/distribution.hpp"

#include <Eigen/Dense>

namespace tdfc {

using DensityMatrix = Eigen::MatrixXcd;

/// Gate and channel imperfections entering the closed-form state fidelity.
/// `per_damping_factor` is the per-photon fidelity cost of one circulator
/// crossing; it defaults to the amplitude-damping value (1+sqrt(1-gamma))/2
/// and can be pinned directly (0.98 reproduces the reference tables).
struct NoiseParams {
    double f_s = 0.999;               ///< single-qubit (H) average fidelity
    double f_t = 0.996;               ///< two-qubit (CZ) process fidelity
    double gamma = 0.0;               ///< photon loss probability per crossing
    double per_damping_factor = 1.0;

    static NoiseParams from_gamma(double f_s, double f_t, double gamma);
    static NoiseParams with_damping_factor(double f_s, double f_t, double factor);

    void validate() const;
};

struct KrausPair {
    Eigen::Matrix2cd k0;
    Eigen::Matrix2cd k1;

    /// Frobenius norm of k0'k0 + k1'k1 - I.
    double completeness_residual() const;
};

/// K0 = diag(1, sqrt(1-gamma)); K1 maps |1> to sqrt(gamma)|0>.
KrausPair amplitude_damping_kraus(double gamma);

/// Chiral-scattering channel of the circulator, in the excited-first basis
/// ordering (|1>, |0>): K0 = diag(-sqrt(2b-1), 1) carries the pi-phase,
/// K1 the leak. Requires beta in [0.5, 1].
KrausPair circulator_kraus(double beta);

/// Loss probability of one circulator crossing, gamma = 2(1 - beta).
double circulator_gamma(double beta);

/// beta = Gamma_R / (Gamma_R + Gamma_L + gamma_rad).
double beta_from_rates(double gamma_r, double gamma_l, double gamma_rad);

/// Output ratio of the interferometer's mirror port, (1 - cos(theta))/2.
double mzi_ratio(double theta);

/// Kraus channel on one qubit of an n-qubit density matrix (identity
/// elsewhere). Dense matrices capped at 10 qubits.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausPair& kraus,
                            int qubit);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, via Hermitian
/// eigendecomposition with eigenvalue clipping at -1e-12. Inputs must be
/// PSD within 1e-9.
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

DensityMatrix pure_density(const Eigen::VectorXcd& psi);

struct FidelityReport {
    int n_h = 0;
    int n_cz = 0;
    int n_damp_ops = 0;  ///< circulator crossings per photon, one less than the TDF count
    double f_c = 0.0;
};

/// Closed-form fidelity budget:
///   f_c = f_s^n_h * f_t^n_cz * per_damping_factor^(n_h * n_damp_ops)
/// with gate counts read off the distribution matrix and
/// n_damp_ops = max(n_tdf - 1, 0).
FidelityReport fidelity_estimate(const DistributionMatrix& d, int n_tdf,
                                 const NoiseParams& params);

struct DampingCheck {
    double exact = 0.0;    ///< channel-level fidelity, every qubit damped once
    double product = 0.0;  ///< product estimate ((1+sqrt(1-gamma))/2)^n
};

/// Damps every qubit of the n-node path cluster state once and compares
/// the exact channel fidelity with the per-photon product estimate
/// (2 <= n <= 6). The estimate treats photons as uncorrelated; entangled
/// photons actually pay the square of the single-photon factor, so the
/// exact value tracks ((1+sqrt(1-gamma))/2)^(2n) instead.
DampingCheck damping_product_check(int n, double gamma);

/// Exact channel fidelity of an arbitrary cluster state (n <= 6 qubits)
/// after damping every excited qubit once.
double damped_fidelity_exact(const ClusterGraph& graph, double gamma);

}  // namespace tdfc
