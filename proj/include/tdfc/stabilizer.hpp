#pragma once

#include "tdfc/bitrow.hpp"
#include "tdfc/cluster_graph.hpp"
#include "tdfc/schedule.hpp"

#include <set>
#include <vector>

namespace tdfc {

/// Stabilizer generators of an n-qubit state over GF(2). Row r encodes the
/// operator (-1)^sign(r) * prod_q X_q^{x(r,q)} Z_q^{z(r,q)}; CZ-only
/// circuits on X/Z-stabilized inputs keep every row a +/-1 Pauli (the
/// number of Y factors stays even).
class StabilizerTableau {
public:
    StabilizerTableau() = default;
    explicit StabilizerTableau(int n);

    int num_qubits() const { return n_; }

    bool x_bit(int row, int qubit) const;  // row 0-based, qubit 1-based
    bool z_bit(int row, int qubit) const;
    bool sign_bit(int row) const;

    void set_x(int row, int qubit, bool v);
    void set_z(int row, int qubit, bool v);
    void set_sign(int row, bool v);

    /// CZ conjugation: X_i -> X_i Z_j, X_j -> X_j Z_i, Z fixed. The sign
    /// flips exactly when a row carries X on both qubits (XX -> YY).
    void apply_cz(int i, int j);

    /// row_to *= row_from, with the phase from reordering the Pauli factors.
    void multiply_rows(int row_to, int row_from);

    /// Rows pairwise commute and remain independent (full GF(2) rank).
    bool invariants_hold() const;

    friend bool operator==(const StabilizerTableau&, const StabilizerTableau&) = default;

private:
    int n_ = 0;
    std::vector<BitRow> x_rows_;
    std::vector<BitRow> z_rows_;
    BitRow signs_;
};

/// Excited slots stabilized by X (the |+> state), virtual slots by Z
/// (vacuum). Every slot is a real qubit; a compiler bug that gates a
/// vacuum slot shows up as a missing edge rather than silent corruption.
StabilizerTableau prepare_plus(const std::set<int>& excited, int n_slots);

StabilizerTableau apply_cz(StabilizerTableau t, int i, int j);

/// prepare_plus on the excitation set, then native gates, then each block's
/// enabled gates in ascending slot order.
StabilizerTableau run_schedule(const Schedule& s);

/// Canonical Gaussian elimination to graph-state form: one X-pivot row per
/// excited qubit whose Z-tail is the adjacency, plus +Z rows on vacuum.
/// Throws NotGraphState when the tableau has any other shape.
ClusterGraph extract_graph(const StabilizerTableau& t, const std::set<int>& excited);

/// True iff both tableaus generate the same signed stabilizer group.
bool states_equal(const StabilizerTableau& a, const StabilizerTableau& b);

}  // namespace tdfc
