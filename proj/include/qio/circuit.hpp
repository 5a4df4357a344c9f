#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qio {

enum class GateKind { X, Z, P, H, T, CNOT };

/// Single gate of the {X, Z, P, H, CNOT, T} set. Single-qubit gates use
/// `wire`; CNOT uses `control` and `target` (stored in wire/wire2).
struct Gate {
    GateKind kind;
    int wire = 0;   // control for CNOT
    int wire2 = 0;  // target, CNOT only

    static Gate single(GateKind k, int w) { return Gate{k, w, 0}; }
    static Gate cnot(int control, int target) { return Gate{GateKind::CNOT, control, target}; }

    bool operator==(const Gate& o) const {
        if (kind != o.kind || wire != o.wire) return false;
        return kind != GateKind::CNOT || wire2 == o.wire2;
    }
};

const char* gate_name(GateKind k);

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    std::size_t size() const { return gates.size(); }
    bool operator==(const Circuit& o) const { return n == o.n && gates == o.gates; }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct NonCliffordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the .qc text format: `qubits <n>` header, one gate per line,
/// `#` comments and blank lines ignored.
Circuit parse_circuit(const std::string& text);

/// Canonical text form; parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& c);

int t_count(const Circuit& c);

/// Deterministic in (n, len, t, seed); exactly `len` gates of which `t` are T.
Circuit random_circuit(int n, int len, int t, std::uint64_t seed);

/// Two same-size circuits with the same unitary (up to global phase),
/// derived from `base` by identity-sequence insertions, commuting-gate swaps
/// and X,X padding. When `with_t` is set, each side additionally picks up a
/// T,T pair via the T^2 = P relation, so both outputs contain T gates.
std::pair<Circuit, Circuit> equivalent_pair(const Circuit& base, std::uint64_t seed,
                                            bool with_t = false);

}  // namespace qio
