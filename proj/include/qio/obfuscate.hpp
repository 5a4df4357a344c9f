#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qio/circuit.hpp"
#include "qio/pauli_sum.hpp"
#include "qio/sim.hpp"
#include "qio/update.hpp"

namespace qio {

enum class Scheme { Canonical, TeleportClifford, TeleportGeneral };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct TCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output of one of the three obfuscation pipelines. Which payload fields
/// are populated depends on the scheme:
///   Canonical        -> canonical (the synthesized circuit; no aux state)
///   TeleportClifford -> aux (2n-qubit (I (x) C)|beta^2n>) + correction
///   TeleportGeneral  -> aux + table (one Pauli sum per 2n-bit outcome)
struct ObfuscatedProgram {
    Scheme scheme = Scheme::Canonical;
    int n = 0;
    Circuit canonical;
    Statevector aux;
    UpdateCircuit correction;
    std::map<std::uint32_t, PauliSum> table;
};

struct EvalReport {
    PauliLabel outcome;
    Statevector output;
    double branch_probability = 1.0;
};

ObfuscatedProgram qio_canonical(const Circuit& c);

/// Gate-teleportation scheme for Cliffords. Both the aux state and the
/// correction program are computed from the canonical form of c, so the
/// serialized program is byte-identical across equivalent inputs.
ObfuscatedProgram qio_teleport_clifford(const Circuit& c);

/// Gate-teleportation scheme for Clifford+T; requires 4^t_count <= limit.
ObfuscatedProgram qio_teleport_general(const Circuit& c,
                                       std::size_t limit = kDefaultTermLimit);

/// Runs the program on `input`, sampling the Bell outcome with a seeded PRNG.
EvalReport evaluate_sampled(const ObfuscatedProgram& p, const Statevector& input,
                            std::uint64_t seed);

/// Runs the program pinned to one Bell outcome; errors on a zero-probability
/// branch. For the canonical scheme the outcome must be all-zero.
EvalReport evaluate_branch(const ObfuscatedProgram& p, const Statevector& input,
                           const PauliLabel& outcome);

/// All 4^n branches (deterministic enumeration; canonical scheme yields one).
std::vector<EvalReport> evaluate_all_branches(const ObfuscatedProgram& p,
                                              const Statevector& input);

std::vector<ObfuscatedProgram> obfuscate_k(const Circuit& c, int k, Scheme scheme,
                                           std::size_t limit = kDefaultTermLimit);

/// Byte-deterministic JSON-shaped text; equality of these bytes is the
/// indistinguishability test surface.
std::string serialize_program(const ObfuscatedProgram& p);
ObfuscatedProgram deserialize_program(const std::string& text);

}  // namespace qio
