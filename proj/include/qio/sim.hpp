#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qio/circuit.hpp"
#include "qio/pauli_sum.hpp"
#include "qio/update.hpp"

namespace qio {

inline constexpr int kSimQubitCap = 24;

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense pure state on m qubits. Qubit i addresses bit (m-1-i) of the
/// amplitude index: qubit 0 is most significant.
struct Statevector {
    int m = 0;
    std::vector<std::complex<double>> amps;

    double norm_sq() const;
};

Statevector basis_state(int m, const std::string& bits);

/// n Bell pairs on 2n qubits; pair i spans qubits (i, n+i), so qubits
/// [0, n) are side A and [n, 2n) side B.
Statevector bell_pairs(int n);

/// Applies c gate by gate; wires[i] is the joint-state qubit carrying
/// circuit wire i.
Statevector apply_circuit(const Statevector& s, const Circuit& c,
                          const std::vector<int>& wires);

/// Applies the single Pauli X^{b_i} Z^{a_i} per wire.
Statevector apply_pauli(const Statevector& s, const PauliLabel& label,
                        const std::vector<int>& wires);

/// s' = sum_i beta_i Pauli_i(s). Guards on exact Parseval == 1 and
/// renormalizes only to absorb float error.
Statevector apply_pauli_sum(const Statevector& s, const PauliSum& ps,
                            const std::vector<int>& wires);

struct BellBranch {
    PauliLabel outcome;
    double probability = 0.0;
    Statevector residual;  // renormalized; empty amps when probability ~ 0
};

/// All 4^n generalized-Bell outcomes for measuring the given (wireC, wireA)
/// pairs, with exact Born probabilities. Probabilities sum to 1. The Bell
/// convention is |beta_ab> = (Z^a X^b (x) I)|beta_00>, so teleporting |psi>
/// through untouched pairs leaves side B in X^b Z^a |psi>.
std::vector<BellBranch> bell_branches(const Statevector& s,
                                      const std::vector<std::pair<int, int>>& pairs);

/// Samples one branch with the Born probabilities using a seeded mt19937_64.
BellBranch bell_measure(const Statevector& s,
                        const std::vector<std::pair<int, int>>& pairs, std::uint64_t seed);

/// Overlap fidelity |<a|b>|^2 (global-phase free).
double fidelity(const Statevector& a, const Statevector& b);

/// Dump: header `state m=<m>`, one `<index-binary> <re> <im>` line per
/// nonzero amplitude, 17 significant digits.
std::string dump_state(const Statevector& s);
Statevector parse_state(const std::string& text);

}  // namespace qio
