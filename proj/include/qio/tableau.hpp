#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qio/circuit.hpp"

namespace qio {

/// Stabilizer tableau of a Clifford unitary U. Row i (i < n) holds the image
/// of X_i under conjugation by U, row n+i the image of Z_i. A row with bits
/// (x, z) and sign r stands for the Pauli (-1)^r i^{x.z} X^x Z^z, the usual
/// sign bookkeeping that keeps all phases in {+1, -1}.
struct CliffordTableau {
    int n = 0;
    // rows[r] holds 2n bits: x bits at [0, n), z bits at [n, 2n).
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::uint8_t> phases;  // 2n sign bits

    bool operator==(const CliffordTableau& o) const {
        return n == o.n && rows == o.rows && phases == o.phases;
    }
};

CliffordTableau identity_tableau(int n);

/// Conjugates every row by g. Rejects T.
CliffordTableau apply_gate(const CliffordTableau& t, const Gate& g);

/// Fold of apply_gate over the circuit, starting from the identity tableau.
CliffordTableau from_circuit(const Circuit& c);

/// True iff M J M^T = J over GF(2) for the standard symplectic form J.
bool is_symplectic(const CliffordTableau& t);

/// Deterministic circuit synthesis: a pure function of the tableau bits with
/// from_circuit(canonical_synthesize(t)) == t. The identity tableau maps to
/// the empty circuit. See tableau.cpp for the frozen elimination order.
Circuit canonical_synthesize(const CliffordTableau& t);

/// Debug dump: header `tableau n=<n>`, then 2n rows of 2n bits + phase column.
std::string dump_tableau(const CliffordTableau& t);

}  // namespace qio
