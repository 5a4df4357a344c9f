#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qio/circuit.hpp"
#include "qio/tableau.hpp"

namespace qio {

/// 2n-bit teleportation byproduct descriptor for the Pauli
/// X^{b_1} Z^{a_1} (x) ... (x) X^{b_n} Z^{a_n}. Bit 2i is a_i, bit 2i+1 is
/// b_i, matching the update-circuit register layout.
struct PauliLabel {
    int n = 0;
    std::vector<std::uint8_t> bits;  // length 2n

    static PauliLabel zero(int n) { return PauliLabel{n, std::vector<std::uint8_t>(2 * n, 0)}; }
    static PauliLabel from_key(int n, std::uint32_t key);
    static PauliLabel from_string(const std::string& s);

    std::uint8_t a(int i) const { return bits[2 * i]; }
    std::uint8_t b(int i) const { return bits[2 * i + 1]; }
    void set_a(int i, std::uint8_t v) { bits[2 * i] = v; }
    void set_b(int i, std::uint8_t v) { bits[2 * i + 1] = v; }

    /// Packs a_1 b_1 ... a_n b_n with a_1 as the most significant bit, so
    /// integer order on keys is lexicographic order on the bit string.
    std::uint32_t key() const;
    std::string to_string() const;

    bool operator==(const PauliLabel& o) const { return n == o.n && bits == o.bits; }
};

enum class UpdateOpKind { SWAP, XOR };

struct UpdateOp {
    UpdateOpKind kind;
    int r1;  // XOR: source
    int r2;  // XOR: destination
    bool operator==(const UpdateOp& o) const = default;
};

/// Straight-line reversible program over the 2n label bits.
struct UpdateCircuit {
    int n = 0;
    std::vector<UpdateOp> ops;
    bool operator==(const UpdateCircuit& o) const = default;
};

/// One-gate update rule of the byproduct label (phases dropped). Rejects T.
PauliLabel gate_update(const PauliLabel& label, const Gate& g);

/// F_C = f_{g_m} o ... o f_{g_1} applied to `label`.
PauliLabel compose_update(const Circuit& c, const PauliLabel& label);

/// Straight-line program computing compose_update(c, .); at most 2|c| ops.
UpdateCircuit compile_update_circuit(const Circuit& c);

/// Canonicalize, then compile: the output is a pure function of the tableau
/// of c, hence byte-identical across equivalent circuits.
UpdateCircuit io_update(const Circuit& c);

PauliLabel eval_update(const UpdateCircuit& u, const PauliLabel& input);

/// Text dump: header `update n=<n>`, one `SWAP i j` / `XOR i j` per line.
std::string dump_update_circuit(const UpdateCircuit& u);
UpdateCircuit parse_update_circuit(const std::string& text);

}  // namespace qio
