#include "tdfc/noise.hpp"

#include "tdfc/dense_state.hpp"
#include "tdfc/errors.hpp"
#include "tdfc/families.hpp"
#include "tdfc/schedule.hpp"

#include <cmath>
#include <string>

namespace tdfc {

NoiseParams NoiseParams::from_gamma(double f_s, double f_t, double gamma) {
    NoiseParams p{f_s, f_t, gamma, (1.0 + std::sqrt(1.0 - gamma)) / 2.0};
    p.validate();
    return p;
}

NoiseParams NoiseParams::with_damping_factor(double f_s, double f_t, double factor) {
    // Invert the single-photon formula so gamma stays consistent with the
    // pinned factor: factor = (1+sqrt(1-gamma))/2. Factors of 1/2 or less
    // have no amplitude-damping counterpart; gamma stays 0 there.
    const double s = 2.0 * factor - 1.0;
    NoiseParams p{f_s, f_t, s > 0.0 && s <= 1.0 ? 1.0 - s * s : 0.0, factor};
    p.validate();
    return p;
}

void NoiseParams::validate() const {
    if (f_s <= 0.0 || f_s > 1.0) throw OutOfRange("f_s must be in (0, 1]");
    if (f_t <= 0.0 || f_t > 1.0) throw OutOfRange("f_t must be in (0, 1]");
    if (gamma < 0.0 || gamma >= 1.0) throw OutOfRange("gamma must be in [0, 1)");
    if (per_damping_factor <= 0.0 || per_damping_factor > 1.0) {
        throw OutOfRange("per_damping_factor must be in (0, 1]");
    }
}

double KrausPair::completeness_residual() const {
    const Eigen::Matrix2cd sum =
        k0.adjoint() * k0 + k1.adjoint() * k1 - Eigen::Matrix2cd::Identity();
    return sum.norm();
}

KrausPair amplitude_damping_kraus(double gamma) {
    if (gamma < 0.0 || gamma >= 1.0) {
        throw OutOfRange("damping probability must be in [0, 1)");
    }
    KrausPair k;
    k.k0 = Eigen::Matrix2cd::Zero();
    k.k0(0, 0) = 1.0;
    k.k0(1, 1) = std::sqrt(1.0 - gamma);
    k.k1 = Eigen::Matrix2cd::Zero();
    k.k1(0, 1) = std::sqrt(gamma);
    return k;
}

KrausPair circulator_kraus(double beta) {
    if (beta < 0.5 || beta > 1.0) {
        throw OutOfRange("chiral scattering requires beta in [0.5, 1], got " +
                         std::to_string(beta));
    }
    KrausPair k;
    k.k0 = Eigen::Matrix2cd::Zero();
    k.k0(0, 0) = -std::sqrt(2.0 * beta - 1.0);
    k.k0(1, 1) = 1.0;
    k.k1 = Eigen::Matrix2cd::Zero();
    k.k1(1, 0) = std::sqrt(2.0 * (1.0 - beta));
    return k;
}

double circulator_gamma(double beta) {
    if (beta < 0.5 || beta > 1.0) {
        throw OutOfRange("beta must be in [0.5, 1]");
    }
    return 2.0 * (1.0 - beta);
}

double beta_from_rates(double gamma_r, double gamma_l, double gamma_rad) {
    if (gamma_r < 0.0 || gamma_l < 0.0 || gamma_rad < 0.0) {
        throw OutOfRange("decay rates must be non-negative");
    }
    const double denom = gamma_r + gamma_l + gamma_rad;
    if (denom <= 0.0) throw OutOfRange("total decay rate must be positive");
    return gamma_r / denom;
}

double mzi_ratio(double theta) {
    return (1.0 - std::cos(theta)) / 2.0;
}

namespace {

constexpr int kMaxDensityQubits = 10;

int qubit_count_of(const DensityMatrix& rho) {
    const Eigen::Index dim = rho.rows();
    if (dim < 1 || rho.cols() != dim || (dim & (dim - 1)) != 0) {
        throw InvalidSpec("density matrix dimension must be a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if (n > kMaxDensityQubits) {
        throw TooLarge("dense density matrices capped at " +
                       std::to_string(kMaxDensityQubits) + " qubits");
    }
    return n;
}

}  // namespace

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausPair& kraus,
                            int qubit) {
    const int n = qubit_count_of(rho);
    if (qubit < 1 || qubit > n) {
        throw IndexOutOfRange("channel target qubit " + std::to_string(qubit));
    }
    const std::size_t bit = std::size_t{1} << (qubit - 1);
    const std::size_t dim = std::size_t{1} << n;

    DensityMatrix out = DensityMatrix::Zero(rho.rows(), rho.cols());
    for (const Eigen::Matrix2cd& k : {kraus.k0, kraus.k1}) {
        // Accumulate K rho K' blockwise over all index pairs that differ
        // only in the target bit.
        for (std::size_t r = 0; r < dim; ++r) {
            if (r & bit) continue;
            for (std::size_t c = 0; c < dim; ++c) {
                if (c & bit) continue;
                Eigen::Matrix2cd block;
                block(0, 0) = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                block(0, 1) = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c | bit));
                block(1, 0) = rho(static_cast<Eigen::Index>(r | bit), static_cast<Eigen::Index>(c));
                block(1, 1) = rho(static_cast<Eigen::Index>(r | bit), static_cast<Eigen::Index>(c | bit));
                const Eigen::Matrix2cd mapped = k * block * k.adjoint();
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += mapped(0, 0);
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c | bit)) += mapped(0, 1);
                out(static_cast<Eigen::Index>(r | bit), static_cast<Eigen::Index>(c)) += mapped(1, 0);
                out(static_cast<Eigen::Index>(r | bit), static_cast<Eigen::Index>(c | bit)) += mapped(1, 1);
            }
        }
    }
    return out;
}

namespace {

DensityMatrix psd_sqrt(const DensityMatrix& m) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(m);
    Eigen::VectorXd vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -1e-9) {
            throw OutOfRange("matrix is not PSD within tolerance: eigenvalue " +
                             std::to_string(vals(i)));
        }
        vals(i) = std::sqrt(std::max(vals(i), 0.0));
    }
    return solver.eigenvectors() * vals.asDiagonal() *
           solver.eigenvectors().adjoint();
}

}  // namespace

double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw InvalidSpec("fidelity requires equal dimensions");
    }
    // Pure-state fast path: F = <psi|sigma|psi>. For Hermitian rho the
    // purity Tr(rho^2) is the squared Frobenius norm.
    const double purity = rho.squaredNorm();
    if (std::abs(purity - 1.0) < 1e-12) {
        Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho);
        const Eigen::Index top = solver.eigenvalues().size() - 1;
        const Eigen::VectorXcd psi = solver.eigenvectors().col(top);
        return (psi.adjoint() * sigma * psi)(0, 0).real();
    }
    const DensityMatrix root = psd_sqrt(rho);
    Eigen::SelfAdjointEigenSolver<DensityMatrix> inner(root * sigma * root);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < inner.eigenvalues().size(); ++i) {
        const double v = inner.eigenvalues()(i);
        if (v < -1e-9) {
            throw OutOfRange("inner fidelity matrix not PSD within tolerance");
        }
        sum += std::sqrt(std::max(v, 0.0));
    }
    return sum * sum;
}

DensityMatrix pure_density(const Eigen::VectorXcd& psi) {
    return psi * psi.adjoint();
}

FidelityReport fidelity_estimate(const DistributionMatrix& d, int n_tdf,
                                 const NoiseParams& params) {
    params.validate();
    if (n_tdf < 0) throw OutOfRange("TDF count must be non-negative");
    const GateCounts counts = gate_counts(d);
    FidelityReport report;
    report.n_h = counts.n_h;
    report.n_cz = counts.n_cz;
    report.n_damp_ops = std::max(n_tdf - 1, 0);
    report.f_c = std::pow(params.f_s, report.n_h) *
                 std::pow(params.f_t, report.n_cz) *
                 std::pow(params.per_damping_factor,
                          static_cast<double>(report.n_h) * report.n_damp_ops);
    return report;
}

double damped_fidelity_exact(const ClusterGraph& graph, double gamma) {
    graph.validate();
    if (graph.n_slots > 6) {
        throw TooLarge("exact damping oracle capped at 6 qubits");
    }
    Schedule s;
    s.n_slots = graph.n_slots;
    s.excitation_set = graph.excited;
    std::map<int, std::set<int>> by_delay;
    for (const auto& [i, j] : graph.edges) {
        if (j == i + 1) {
            s.native_chain_gates.insert(i);
        } else {
            by_delay[j - i].insert(i);
        }
    }
    for (auto& [delay, gates] : by_delay) s.blocks.push_back({delay, std::move(gates)});

    const DenseState psi = dense_oracle(s);
    DensityMatrix rho = pure_density(psi.amplitudes);
    const KrausPair kraus = amplitude_damping_kraus(gamma);
    for (int q = 1; q <= graph.n_slots; ++q) {
        rho = apply_channel(rho, kraus, q);
    }
    return (psi.amplitudes.adjoint() * rho * psi.amplitudes)(0, 0).real();
}

DampingCheck damping_product_check(int n, double gamma) {
    if (n < 2 || n > 6) throw OutOfRange("product check requires 2 <= n <= 6");
    DampingCheck check;
    check.exact = damped_fidelity_exact(build_family(FamilySpec::linear(n)), gamma);
    check.product = std::pow((1.0 + std::sqrt(1.0 - gamma)) / 2.0, n);
    return check;
}

}  // namespace tdfc
