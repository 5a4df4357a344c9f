#include "qio/tableau.hpp"

#include <sstream>

namespace qio {

CliffordTableau identity_tableau(int n) {
    if (n < 1) throw std::invalid_argument("identity_tableau: n must be >= 1");
    CliffordTableau t;
    t.n = n;
    t.rows.assign(2 * n, std::vector<std::uint8_t>(2 * n, 0));
    t.phases.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        t.rows[i][i] = 1;          // X_i
        t.rows[n + i][n + i] = 1;  // Z_i
    }
    return t;
}

namespace {

// Per-row conjugation rules; x bits at [0, n), z bits at [n, 2n).
void conjugate_row(std::vector<std::uint8_t>& row, std::uint8_t& r, int n, const Gate& g) {
    switch (g.kind) {
        case GateKind::X:
            r ^= row[n + g.wire];
            break;
        case GateKind::Z:
            r ^= row[g.wire];
            break;
        case GateKind::H: {
            r ^= row[g.wire] & row[n + g.wire];
            std::swap(row[g.wire], row[n + g.wire]);
            break;
        }
        case GateKind::P:
            r ^= row[g.wire] & row[n + g.wire];
            row[n + g.wire] ^= row[g.wire];
            break;
        case GateKind::CNOT: {
            std::uint8_t xc = row[g.wire], zc = row[n + g.wire];
            std::uint8_t xt = row[g.wire2], zt = row[n + g.wire2];
            r ^= xc & zt & (xt ^ zc ^ 1);
            row[g.wire2] = xt ^ xc;
            row[n + g.wire] = zc ^ zt;
            break;
        }
        case GateKind::T:
            throw NonCliffordError("T gate has no tableau action");
    }
}

void apply_in_place(CliffordTableau& t, const Gate& g) {
    for (int i = 0; i < 2 * t.n; ++i) conjugate_row(t.rows[i], t.phases[i], t.n, g);
}

}  // namespace

CliffordTableau apply_gate(const CliffordTableau& t, const Gate& g) {
    CliffordTableau out = t;
    apply_in_place(out, g);
    return out;
}

CliffordTableau from_circuit(const Circuit& c) {
    CliffordTableau t = identity_tableau(c.n);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (c.gates[i].kind == GateKind::T) {
            throw NonCliffordError("non-Clifford gate T at position " + std::to_string(i));
        }
        apply_in_place(t, c.gates[i]);
    }
    return t;
}

bool is_symplectic(const CliffordTableau& t) {
    int n = t.n;
    // <row_i, row_j> = sum_k x_i[k] z_j[k] + z_i[k] x_j[k] mod 2. Must match J:
    // rows i and n+i anticommute, all other pairs commute.
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = i; j < 2 * n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) {
                s ^= (t.rows[i][k] & t.rows[j][n + k]) ^ (t.rows[i][n + k] & t.rows[j][k]);
            }
            int expected = (j == i + n) ? 1 : 0;
            if (s != expected) return false;
        }
    }
    return true;
}

namespace {

struct Eliminator {
    CliffordTableau t;
    std::vector<Gate> applied;

    void emit(const Gate& g) {
        apply_in_place(t, g);
        applied.push_back(g);
    }

    std::uint8_t x(int row, int q) const { return t.rows[row][q]; }
    std::uint8_t z(int row, int q) const { return t.rows[row][t.n + q]; }

    // Fixed staged elimination, one qubit at a time. Stage A reduces the X_j
    // image to X_j, stage B reduces the Z_j image to Z_j; the loop orders and
    // pivot choices below are frozen (byte equality of the synthesized
    // circuit is the indistinguishability witness).
    void run() {
        int n = t.n;
        for (int j = 0; j < n; ++j) {
            // Stage A: row j -> +-X_j.
            int pivot = -1;
            for (int k = j; k < n; ++k) {
                if (x(j, k)) { pivot = k; break; }
            }
            if (pivot < 0) {
                for (int k = j; k < n; ++k) {
                    if (z(j, k)) { pivot = k; break; }
                }
                emit(Gate::single(GateKind::H, pivot));
            }
            if (pivot != j) {
                emit(Gate::cnot(j, pivot));
                emit(Gate::cnot(pivot, j));
                emit(Gate::cnot(j, pivot));
            }
            for (int k = j + 1; k < n; ++k) {
                if (x(j, k)) emit(Gate::cnot(j, k));
            }
            bool any_z = false;
            for (int k = j; k < n; ++k) any_z = any_z || z(j, k);
            if (any_z) {
                if (!z(j, j)) emit(Gate::single(GateKind::P, j));
                for (int k = j + 1; k < n; ++k) {
                    if (z(j, k)) emit(Gate::cnot(k, j));
                }
                emit(Gate::single(GateKind::P, j));
            }
            // Stage B: row n+j -> +-Z_j. Anticommutation with X_j gives
            // z(n+j, j) == 1 here.
            for (int k = j + 1; k < n; ++k) {
                if (z(n + j, k)) emit(Gate::cnot(k, j));
            }
            bool any_x = false;
            for (int k = j; k < n; ++k) any_x = any_x || x(n + j, k);
            if (any_x) {
                emit(Gate::single(GateKind::H, j));
                for (int k = j + 1; k < n; ++k) {
                    if (x(n + j, k)) emit(Gate::cnot(j, k));
                }
                if (z(n + j, j)) emit(Gate::single(GateKind::P, j));
                emit(Gate::single(GateKind::H, j));
            }
        }
        // Signs: Z_j flips the X_j image, X_j flips the Z_j image.
        for (int j = 0; j < n; ++j) {
            if (t.phases[j]) emit(Gate::single(GateKind::Z, j));
            if (t.phases[n + j]) emit(Gate::single(GateKind::X, j));
        }
    }
};

}  // namespace

Circuit canonical_synthesize(const CliffordTableau& t) {
    Eliminator e{t, {}};
    e.run();
    // The applied gates bring t to the identity: g_k...g_1 U = I, hence
    // U = g_1^-1 ... g_k^-1, read as a gate list in reverse order. Every gate
    // in the set is self-inverse except P, whose inverse is P P P.
    Circuit out;
    out.n = t.n;
    for (auto it = e.applied.rbegin(); it != e.applied.rend(); ++it) {
        if (it->kind == GateKind::P) {
            out.gates.push_back(*it);
            out.gates.push_back(*it);
            out.gates.push_back(*it);
        } else {
            out.gates.push_back(*it);
        }
    }
    return out;
}

std::string dump_tableau(const CliffordTableau& t) {
    std::ostringstream out;
    out << "tableau n=" << t.n << "\n";
    for (int i = 0; i < 2 * t.n; ++i) {
        for (int k = 0; k < 2 * t.n; ++k) out << int(t.rows[i][k]);
        out << ' ' << int(t.phases[i]) << '\n';
    }
    return out.str();
}

}  // namespace qio
