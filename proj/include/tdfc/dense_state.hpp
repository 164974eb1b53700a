#pragma once

#include "tdfc/schedule.hpp"
#include "tdfc/stabilizer.hpp"

#include <Eigen/Dense>

namespace tdfc {

/// Amplitude-level n-qubit state, capped at 12 qubits. Basis index bit q-1
/// holds qubit q, so |idx> enumerates slots little-endian.
struct DenseState {
    int n = 0;
    Eigen::VectorXcd amplitudes;
};

/// Builds |+> on excited slots, |0> on virtual slots.
DenseState dense_plus(const std::set<int>& excited, int n_slots);

/// Runs the schedule's gates on the dense state; the independent check for
/// the tableau pipeline. Throws TooLarge above 12 qubits.
DenseState dense_oracle(const Schedule& s);

DenseState apply_cz_dense(DenseState state, int i, int j);

/// |<a|b>|^2 for pure states.
double dense_fidelity(const DenseState& a, const DenseState& b);

/// Reconstructs the tableau's state vector by projecting a basis vector
/// onto the stabilizer group's +1 eigenspace (global phase arbitrary).
DenseState dense_from_tableau(const StabilizerTableau& t);

}  // namespace tdfc
