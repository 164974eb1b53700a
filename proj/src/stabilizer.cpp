#include "tdfc/stabilizer.hpp"

#include "tdfc/errors.hpp"

#include <string>
#include <utility>

namespace tdfc {

StabilizerTableau::StabilizerTableau(int n) : n_(n) {
    if (n < 0) throw InvalidSpec("qubit count must be non-negative");
    x_rows_.assign(static_cast<std::size_t>(n), BitRow(static_cast<std::size_t>(n)));
    z_rows_.assign(static_cast<std::size_t>(n), BitRow(static_cast<std::size_t>(n)));
    signs_ = BitRow(static_cast<std::size_t>(n));
}

bool StabilizerTableau::x_bit(int row, int qubit) const {
    return x_rows_[static_cast<std::size_t>(row)].get(static_cast<std::size_t>(qubit - 1));
}
bool StabilizerTableau::z_bit(int row, int qubit) const {
    return z_rows_[static_cast<std::size_t>(row)].get(static_cast<std::size_t>(qubit - 1));
}
bool StabilizerTableau::sign_bit(int row) const {
    return signs_.get(static_cast<std::size_t>(row));
}
void StabilizerTableau::set_x(int row, int qubit, bool v) {
    x_rows_[static_cast<std::size_t>(row)].set(static_cast<std::size_t>(qubit - 1), v);
}
void StabilizerTableau::set_z(int row, int qubit, bool v) {
    z_rows_[static_cast<std::size_t>(row)].set(static_cast<std::size_t>(qubit - 1), v);
}
void StabilizerTableau::set_sign(int row, bool v) {
    signs_.set(static_cast<std::size_t>(row), v);
}

void StabilizerTableau::apply_cz(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) {
        throw IndexOutOfRange("CZ(" + std::to_string(i) + "," + std::to_string(j) +
                              ") on " + std::to_string(n_) + " qubits");
    }
    const std::size_t bi = static_cast<std::size_t>(i - 1);
    const std::size_t bj = static_cast<std::size_t>(j - 1);
    for (std::size_t r = 0; r < x_rows_.size(); ++r) {
        const bool xi = x_rows_[r].get(bi);
        const bool xj = x_rows_[r].get(bj);
        if (xi) z_rows_[r].toggle(bj);
        if (xj) z_rows_[r].toggle(bi);
        if (xi && xj) signs_.toggle(r);
    }
}

void StabilizerTableau::multiply_rows(int row_to, int row_from) {
    const std::size_t to = static_cast<std::size_t>(row_to);
    const std::size_t from = static_cast<std::size_t>(row_from);
    // Phase from moving the incoming X factors past the existing Z factors.
    const bool extra = BitRow::and_parity(z_rows_[to], x_rows_[from]);
    x_rows_[to].xor_in(x_rows_[from]);
    z_rows_[to].xor_in(z_rows_[from]);
    if (signs_.get(from) != extra) signs_.toggle(to);
}

bool StabilizerTableau::invariants_hold() const {
    const std::size_t n = static_cast<std::size_t>(n_);
    // Pairwise commutation: the symplectic product must vanish.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = r + 1; s < n; ++s) {
            const bool anti = BitRow::and_parity(x_rows_[r], z_rows_[s]) !=
                              BitRow::and_parity(z_rows_[r], x_rows_[s]);
            if (anti) return false;
        }
    }
    // Independence: rank of the combined (x|z) matrix equals n.
    std::vector<std::pair<BitRow, BitRow>> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) rows.emplace_back(x_rows_[r], z_rows_[r]);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < n; ++col) {
        const bool in_x = col < n;
        const std::size_t bit = in_x ? col : col - n;
        std::size_t pivot = rank;
        while (pivot < n &&
               !(in_x ? rows[pivot].first.get(bit) : rows[pivot].second.get(bit))) {
            ++pivot;
        }
        if (pivot == n) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            if (in_x ? rows[r].first.get(bit) : rows[r].second.get(bit)) {
                rows[r].first.xor_in(rows[rank].first);
                rows[r].second.xor_in(rows[rank].second);
            }
        }
        ++rank;
    }
    return rank == n;
}

StabilizerTableau prepare_plus(const std::set<int>& excited, int n_slots) {
    for (int q : excited) {
        if (q < 1 || q > n_slots) {
            throw IndexOutOfRange("excited slot " + std::to_string(q) +
                                  " outside [1, " + std::to_string(n_slots) + "]");
        }
    }
    StabilizerTableau t(n_slots);
    for (int q = 1; q <= n_slots; ++q) {
        if (excited.count(q)) {
            t.set_x(q - 1, q, true);
        } else {
            t.set_z(q - 1, q, true);
        }
    }
    return t;
}

StabilizerTableau apply_cz(StabilizerTableau t, int i, int j) {
    t.apply_cz(i, j);
    return t;
}

StabilizerTableau run_schedule(const Schedule& s) {
    s.validate();
    StabilizerTableau t = prepare_plus(s.excitation_set, s.n_slots);
    for (const auto& [i, j] : s.all_gates()) t.apply_cz(i, j);
    return t;
}

namespace {

/// Mutable row set with signed Pauli row arithmetic, used by the two
/// canonicalization routines below.
struct RowSet {
    std::vector<BitRow> x, z;
    BitRow signs;
    std::size_t n = 0;

    explicit RowSet(const StabilizerTableau& t)
        : signs(static_cast<std::size_t>(t.num_qubits())),
          n(static_cast<std::size_t>(t.num_qubits())) {
        x.assign(n, BitRow(n));
        z.assign(n, BitRow(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t q = 0; q < n; ++q) {
                x[r].set(q, t.x_bit(static_cast<int>(r), static_cast<int>(q) + 1));
                z[r].set(q, t.z_bit(static_cast<int>(r), static_cast<int>(q) + 1));
            }
            signs.set(r, t.sign_bit(static_cast<int>(r)));
        }
    }

    void multiply(std::size_t to, std::size_t from) {
        const bool extra = BitRow::and_parity(z[to], x[from]);
        x[to].xor_in(x[from]);
        z[to].xor_in(z[from]);
        if (signs.get(from) != extra) signs.toggle(to);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        std::swap(x[a], x[b]);
        std::swap(z[a], z[b]);
        const bool sa = signs.get(a);
        signs.set(a, signs.get(b));
        signs.set(b, sa);
    }

    bool bit(std::size_t row, std::size_t col) const {
        return col < n ? x[row].get(col) : z[row].get(col - n);
    }

    /// Full reduced row echelon over the 2n combined columns (X block
    /// first), lowest pivot column first. Returns pivot columns per row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < 2 * n && rank < n; ++col) {
            std::size_t pivot = rank;
            while (pivot < n && !bit(pivot, col)) ++pivot;
            if (pivot == n) continue;
            swap_rows(rank, pivot);
            for (std::size_t r = 0; r < n; ++r) {
                if (r != rank && bit(r, col)) multiply(r, rank);
            }
            pivots.push_back(col);
            ++rank;
        }
        return pivots;
    }
};

}  // namespace

ClusterGraph extract_graph(const StabilizerTableau& t, const std::set<int>& excited) {
    const int n = t.num_qubits();
    RowSet rows(t);

    // Phase 1: RREF over the X block only. Pivot columns must be exactly
    // the excited qubits; remaining rows are X-free.
    std::size_t rank = 0;
    std::vector<std::size_t> x_pivot_col;
    for (std::size_t col = 0; col < rows.n; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.n && !rows.x[pivot].get(col)) ++pivot;
        if (pivot == rows.n) continue;
        rows.swap_rows(rank, pivot);
        for (std::size_t r = 0; r < rows.n; ++r) {
            if (r != rank && rows.x[r].get(col)) rows.multiply(r, rank);
        }
        x_pivot_col.push_back(col);
        ++rank;
    }
    std::set<int> pivot_qubits;
    for (auto col : x_pivot_col) pivot_qubits.insert(static_cast<int>(col) + 1);
    if (pivot_qubits != excited) {
        throw NotGraphState("X support does not match the excited set");
    }

    // Phase 2: Gaussian elimination among the X-free rows, whose pivots
    // also clean the vacuum Z-tails of the X-pivot rows. Checks run after
    // all eliminations so every row has settled.
    for (std::size_t zr = rank; zr < rows.n; ++zr) {
        const std::size_t col = rows.z[zr].lowest_set();
        if (col == rows.n) throw NotGraphState("dependent generator rows");
        for (std::size_t other = 0; other < rows.n; ++other) {
            if (other != zr && rows.z[other].get(col) && !rows.x[other].get(col)) {
                rows.multiply(other, zr);
            }
        }
    }
    for (std::size_t zr = rank; zr < rows.n; ++zr) {
        if (rows.z[zr].popcount() != 1 || rows.x[zr].any() || rows.signs.get(zr)) {
            throw NotGraphState("vacuum stabilizer is not +Z");
        }
        const std::size_t col = rows.z[zr].lowest_set();
        if (excited.count(static_cast<int>(col) + 1)) {
            throw NotGraphState("Z-type stabilizer on an excited qubit");
        }
    }

    // Phase 3: X-pivot rows must now be +X_v with a Z-tail on excited
    // qubits only; tails give the (symmetric) adjacency.
    std::set<Edge> edges;
    std::vector<std::size_t> row_of_qubit(static_cast<std::size_t>(n), rows.n);
    for (std::size_t r = 0; r < rank; ++r) row_of_qubit[x_pivot_col[r]] = r;
    for (std::size_t r = 0; r < rank; ++r) {
        const std::size_t v = x_pivot_col[r];
        if (rows.x[r].popcount() != 1) {
            throw NotGraphState("generator carries X on several qubits");
        }
        if (rows.z[r].get(v)) throw NotGraphState("self Z on an excited qubit");
        if (rows.signs.get(r)) throw NotGraphState("negative graph-state generator");
        for (std::size_t u = 0; u < static_cast<std::size_t>(n); ++u) {
            if (!rows.z[r].get(u)) continue;
            if (!excited.count(static_cast<int>(u) + 1)) {
                throw NotGraphState("Z-tail reaches a vacuum qubit");
            }
            const std::size_t ru = row_of_qubit[u];
            if (!rows.z[ru].get(v)) throw NotGraphState("asymmetric adjacency");
            edges.insert(make_edge(static_cast<int>(v) + 1, static_cast<int>(u) + 1));
        }
    }
    return ClusterGraph(n, excited, std::move(edges));
}

bool states_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InvalidSpec("states_equal requires equal qubit counts");
    }
    RowSet canon(a);
    const auto pivots = canon.rref();
    if (pivots.size() != canon.n) return false;  // degenerate tableau

    RowSet probe(b);
    for (std::size_t r = 0; r < probe.n; ++r) {
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            if (probe.bit(r, pivots[p])) {
                // probe row *= canon row p
                const bool extra = BitRow::and_parity(probe.z[r], canon.x[p]);
                probe.x[r].xor_in(canon.x[p]);
                probe.z[r].xor_in(canon.z[p]);
                if (canon.signs.get(p) != extra) probe.signs.toggle(r);
            }
        }
        if (probe.x[r].any() || probe.z[r].any() || probe.signs.get(r)) {
            return false;
        }
    }
    return true;
}

}  // namespace tdfc
