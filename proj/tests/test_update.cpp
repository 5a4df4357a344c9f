#include "qio/update.hpp"

#include "doctest.h"
#include "qio/verify.hpp"

using namespace qio;

namespace {

PauliLabel lab(const std::string& bits) { return PauliLabel::from_string(bits); }

}  // namespace

TEST_CASE("label packing and strings") {
    PauliLabel l = PauliLabel::zero(2);
    l.set_a(0, 1);
    l.set_b(1, 1);
    CHECK(l.to_string() == "1001");
    CHECK(l.key() == 0b1001u);
    CHECK(PauliLabel::from_key(2, 0b1001u) == l);
    CHECK(PauliLabel::from_string("1001") == l);
    CHECK_THROWS(PauliLabel::from_string("101"));
    CHECK_THROWS(PauliLabel::from_string("1x"));
    for (std::uint32_t k = 0; k < 64; ++k) {
        CHECK(PauliLabel::from_key(3, k).key() == k);
    }
}

TEST_CASE("single-gate update rules") {
    Gate h = Gate::single(GateKind::H, 0);
    Gate p = Gate::single(GateKind::P, 0);
    CHECK(gate_update(lab("10"), h) == lab("01"));  // (a,b)=(1,0) -> (0,1)
    CHECK(gate_update(lab("01"), h) == lab("10"));
    CHECK(gate_update(lab("11"), h) == lab("11"));
    CHECK(gate_update(lab("01"), p) == lab("11"));  // P X P^+ ~ XZ
    CHECK(gate_update(lab("10"), p) == lab("10"));  // P Z P^+ = Z
    CHECK(gate_update(lab("10"), Gate::single(GateKind::X, 0)) == lab("10"));
    CHECK(gate_update(lab("01"), Gate::single(GateKind::Z, 0)) == lab("01"));
    // CNOT(0,1): (a1,b1,a2,b2) -> (a1^a2, b1, a2, b1^b2)
    CHECK(gate_update(lab("0011"), Gate::cnot(0, 1)) == lab("1011"));
    CHECK(gate_update(lab("0100"), Gate::cnot(0, 1)) == lab("0101"));
    CHECK_THROWS_AS(gate_update(lab("01"), Gate::single(GateKind::T, 0)), NonCliffordError);
}

TEST_CASE("update rule matches conjugation by the dense oracle") {
    // Pauli(F(s)) must equal U Pauli(s) U^+ up to global phase.
    std::vector<Circuit> gates = {
        parse_circuit("qubits 2\nH 0"),   parse_circuit("qubits 2\nP 1"),
        parse_circuit("qubits 2\nX 0"),   parse_circuit("qubits 2\nZ 1"),
        parse_circuit("qubits 2\nCNOT 0 1"), parse_circuit("qubits 2\nCNOT 1 0"),
    };
    for (const Circuit& c : gates) {
        DenseUnitary u = circuit_unitary(c);
        for (std::uint32_t key = 0; key < 16; ++key) {
            PauliLabel s = PauliLabel::from_key(2, key);
            PauliLabel fs = compose_update(c, s);
            DenseUnitary lhs = matmul(pauli_unitary(fs), u);
            DenseUnitary rhs = matmul(u, pauli_unitary(s));
            CHECK(equal_up_to_phase(lhs, rhs, 1e-12));
        }
    }
}

TEST_CASE("compose_update matches the oracle on random Clifford circuits") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Circuit c = random_circuit(3, 15, 0, seed);
        DenseUnitary u = circuit_unitary(c);
        for (std::uint32_t key = 0; key < 64; ++key) {
            PauliLabel s = PauliLabel::from_key(3, key);
            PauliLabel fs = compose_update(c, s);
            CHECK(equal_up_to_phase(matmul(pauli_unitary(fs), u),
                                    matmul(u, pauli_unitary(s)), 1e-9));
        }
    }
}

TEST_CASE("compile goldens") {
    UpdateCircuit uh = compile_update_circuit(parse_circuit("qubits 1\nH 0"));
    REQUIRE(uh.ops.size() == 1);
    CHECK(uh.ops[0] == UpdateOp{UpdateOpKind::SWAP, 0, 1});

    UpdateCircuit up = compile_update_circuit(parse_circuit("qubits 1\nP 0"));
    REQUIRE(up.ops.size() == 1);
    CHECK(up.ops[0] == UpdateOp{UpdateOpKind::XOR, 1, 0});

    UpdateCircuit ucx = compile_update_circuit(parse_circuit("qubits 2\nCNOT 0 1"));
    REQUIRE(ucx.ops.size() == 2);
    CHECK(ucx.ops[0] == UpdateOp{UpdateOpKind::XOR, 2, 0});
    CHECK(ucx.ops[1] == UpdateOp{UpdateOpKind::XOR, 1, 3});

    CHECK(compile_update_circuit(parse_circuit("qubits 1\nX 0\nZ 0")).ops.empty());
}

TEST_CASE("compiled program agrees with compose_update exhaustively") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Circuit c = random_circuit(3, 12, 0, seed + 77);
        UpdateCircuit u = compile_update_circuit(c);
        CHECK(u.ops.size() <= 2 * c.size());
        for (std::uint32_t key = 0; key < 64; ++key) {
            PauliLabel s = PauliLabel::from_key(3, key);
            CHECK(eval_update(u, s) == compose_update(c, s));
        }
    }
}

TEST_CASE("io_update is byte-identical across equivalent circuits") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Circuit base = random_circuit(3, 10, 0, seed + 5);
        auto [a, b] = equivalent_pair(base, seed);
        CHECK(dump_update_circuit(io_update(a)) == dump_update_circuit(io_update(b)));
    }
}

TEST_CASE("io_update computes the same label map as the circuit") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Circuit c = random_circuit(2, 10, 0, seed + 31);
        UpdateCircuit u = io_update(c);
        for (std::uint32_t key = 0; key < 16; ++key) {
            PauliLabel s = PauliLabel::from_key(2, key);
            CHECK(eval_update(u, s) == compose_update(c, s));
        }
    }
}

TEST_CASE("dump and parse round trip") {
    UpdateCircuit u = compile_update_circuit(random_circuit(3, 14, 0, 9));
    CHECK(parse_update_circuit(dump_update_circuit(u)) == u);
    CHECK(dump_update_circuit(UpdateCircuit{2, {}}) == "update n=2\n");
    CHECK_THROWS(parse_update_circuit("nonsense"));
    CHECK_THROWS(parse_update_circuit("update n=1\nXOR 0 5"));
    CHECK_THROWS(parse_update_circuit("update n=1\nFROB 0 1"));
}
