#include "tdfc/dense_state.hpp"

#include "tdfc/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace tdfc {

namespace {

constexpr int kMaxDenseQubits = 12;

void check_size(int n) {
    if (n > kMaxDenseQubits) {
        throw TooLarge("dense simulation capped at " +
                       std::to_string(kMaxDenseQubits) + " qubits, got " +
                       std::to_string(n));
    }
    if (n < 0) throw InvalidSpec("negative qubit count");
}

}  // namespace

DenseState dense_plus(const std::set<int>& excited, int n_slots) {
    check_size(n_slots);
    for (int q : excited) {
        if (q < 1 || q > n_slots) {
            throw IndexOutOfRange("excited slot " + std::to_string(q));
        }
    }
    const std::size_t dim = std::size_t{1} << n_slots;
    std::size_t vacuum_mask = 0;
    for (int q = 1; q <= n_slots; ++q) {
        if (!excited.count(q)) vacuum_mask |= std::size_t{1} << (q - 1);
    }
    DenseState state{n_slots, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))};
    const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << excited.size()));
    for (std::size_t idx = 0; idx < dim; ++idx) {
        if ((idx & vacuum_mask) == 0) {
            state.amplitudes(static_cast<Eigen::Index>(idx)) = amp;
        }
    }
    return state;
}

DenseState apply_cz_dense(DenseState state, int i, int j) {
    if (i < 1 || i > state.n || j < 1 || j > state.n || i == j) {
        throw IndexOutOfRange("dense CZ(" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
    const std::size_t mask =
        (std::size_t{1} << (i - 1)) | (std::size_t{1} << (j - 1));
    const std::size_t dim = std::size_t{1} << state.n;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        if ((idx & mask) == mask) {
            state.amplitudes(static_cast<Eigen::Index>(idx)) *= -1.0;
        }
    }
    return state;
}

DenseState dense_oracle(const Schedule& s) {
    s.validate();
    check_size(s.n_slots);
    DenseState state = dense_plus(s.excitation_set, s.n_slots);
    for (const auto& [i, j] : s.all_gates()) {
        state = apply_cz_dense(std::move(state), i, j);
    }
    return state;
}

double dense_fidelity(const DenseState& a, const DenseState& b) {
    if (a.n != b.n) throw InvalidSpec("fidelity requires equal qubit counts");
    return std::norm(a.amplitudes.dot(b.amplitudes));
}

namespace {

/// v <- (v + g v)/2 for a stabilizer generator g = (-1)^s X^x Z^z, using
/// g|b> = s * (-1)^(z.b) |b xor x>.
void project_onto_generator(const StabilizerTableau& t, int row,
                            Eigen::VectorXcd& v) {
    const int n = t.num_qubits();
    std::size_t x_mask = 0, z_mask = 0;
    for (int q = 1; q <= n; ++q) {
        if (t.x_bit(row, q)) x_mask |= std::size_t{1} << (q - 1);
        if (t.z_bit(row, q)) z_mask |= std::size_t{1} << (q - 1);
    }
    const double sign = t.sign_bit(row) ? -1.0 : 1.0;
    const std::size_t dim = std::size_t{1} << n;
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        const double phase =
            (std::popcount(b & z_mask) & 1) ? -sign : sign;
        out(static_cast<Eigen::Index>(b ^ x_mask)) =
            phase * v(static_cast<Eigen::Index>(b));
    }
    v = 0.5 * (v + out);
}

}  // namespace

DenseState dense_from_tableau(const StabilizerTableau& t) {
    const int n = t.num_qubits();
    check_size(n);
    const std::size_t dim = std::size_t{1} << n;

    // The projector has trace 1, so some basis vector survives with norm
    // at least 2^-n; try them in order (index 0 works for every CZ-circuit
    // state since all of its nonzero amplitudes share the |0...0> support).
    for (std::size_t k = 0; k < dim; ++k) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
        v(static_cast<Eigen::Index>(k)) = 1.0;
        for (int row = 0; row < n; ++row) project_onto_generator(t, row, v);
        const double norm = v.norm();
        if (norm > 1e-9) {
            return {n, v / norm};
        }
    }
    throw NotGraphState("stabilizer projector annihilated every basis vector");
}

}  // namespace tdfc
