#include "qio/sim.hpp"

#include <numbers>

#include "doctest.h"
#include "test_util.hpp"

using namespace qio;
using cd = std::complex<double>;

TEST_CASE("basis_state") {
    Statevector s = basis_state(2, "10");
    CHECK(s.m == 2);
    CHECK(s.amps[0b10] == cd(1, 0));
    CHECK(s.norm_sq() == doctest::Approx(1.0));
    CHECK_THROWS(basis_state(2, "1"));
    CHECK_THROWS(basis_state(2, "1x"));
    CHECK_THROWS_AS(basis_state(kSimQubitCap + 1, std::string(kSimQubitCap + 1, '0')),
                    CapError);
}

TEST_CASE("bell_pairs exact amplitudes") {
    Statevector one = bell_pairs(1);
    CHECK(std::abs(one.amps[0b00] - cd(std::numbers::sqrt2 / 2, 0)) < 1e-15);
    CHECK(std::abs(one.amps[0b11] - cd(std::numbers::sqrt2 / 2, 0)) < 1e-15);
    CHECK(one.amps[0b01] == cd(0, 0));

    Statevector two = bell_pairs(2);  // pair i on qubits (i, 2+i)
    for (std::size_t idx = 0; idx < 16; ++idx) {
        bool diag = (idx >> 2) == (idx & 3);
        CHECK(two.amps[idx] == (diag ? cd(0.5, 0) : cd(0, 0)));
    }
}

TEST_CASE("qubit 0 is the most significant index bit") {
    Statevector s = basis_state(2, "00");
    s = apply_circuit(s, parse_circuit("qubits 1\nX 0"), {0});
    CHECK(s.amps[0b10] == cd(1, 0));
    s = apply_circuit(basis_state(2, "00"), parse_circuit("qubits 1\nX 0"), {1});
    CHECK(s.amps[0b01] == cd(1, 0));
}

TEST_CASE("gate relations on the simulator") {
    Statevector plus = apply_circuit(basis_state(1, "0"), parse_circuit("qubits 1\nH 0"), {0});
    CHECK(plus.amps[0].real() == doctest::Approx(std::numbers::sqrt2 / 2));
    CHECK(plus.amps[1].real() == doctest::Approx(std::numbers::sqrt2 / 2));

    // T^2 == P on random states.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Statevector in = testutil::random_state(2, seed);
        Statevector tt = apply_circuit(in, parse_circuit("qubits 1\nT 0\nT 0"), {1});
        Statevector p = apply_circuit(in, parse_circuit("qubits 1\nP 0"), {1});
        CHECK(fidelity(tt, p) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("apply_circuit matches the dense oracle") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Circuit c = random_circuit(3, 14, 2, seed);
        Statevector in = testutil::random_state(3, seed + 100);
        Statevector got = apply_circuit(in, c, {0, 1, 2});
        Statevector want = testutil::oracle_apply(c, in);
        CHECK(fidelity(got, want) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("apply_pauli sign convention") {
    // (X^b Z^a)|x> = (-1)^{a.x}|x ^ b>
    Statevector s = basis_state(1, "1");
    PauliLabel za = PauliLabel::from_string("10");  // Z
    CHECK(apply_pauli(s, za, {0}).amps[1] == cd(-1, 0));
    PauliLabel xb = PauliLabel::from_string("01");  // X
    CHECK(apply_pauli(s, xb, {0}).amps[0] == cd(1, 0));
    PauliLabel y = PauliLabel::from_string("11");  // XZ
    CHECK(apply_pauli(s, y, {0}).amps[0] == cd(-1, 0));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Statevector in = testutil::random_state(2, seed + 40);
        for (std::uint32_t key = 0; key < 16; ++key) {
            PauliLabel l = PauliLabel::from_key(2, key);
            Statevector got = apply_pauli(in, l, {0, 1});
            Statevector want = testutil::unitary_column(pauli_unitary(l), 0, 2);
            // compare against dense matrix-vector product
            DenseUnitary u = pauli_unitary(l);
            Statevector ref;
            ref.m = 2;
            ref.amps.assign(4, cd(0, 0));
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t k = 0; k < 4; ++k) ref.amps[r] += u.at(r, k) * in.amps[k];
            }
            for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(got.amps[i] - ref.amps[i]) < 1e-12);
        }
    }
}

TEST_CASE("apply_pauli_sum matches the dense oracle") {
    Circuit c = parse_circuit("qubits 2\nT 0\nCNOT 0 1\nT 1\nH 0");
    for (std::uint32_t key = 0; key < 16; ++key) {
        PauliSum ps = propagate(c, PauliLabel::from_key(2, key));
        Statevector in = testutil::random_state(2, key);
        Statevector got = apply_pauli_sum(in, ps, {0, 1});
        DenseUnitary u = pauli_sum_unitary(ps);
        Statevector ref;
        ref.m = 2;
        ref.amps.assign(4, cd(0, 0));
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t k = 0; k < 4; ++k) ref.amps[r] += u.at(r, k) * in.amps[k];
        }
        CHECK(fidelity(got, ref) == doctest::Approx(1.0).epsilon(1e-10));
    }
    PauliSum bad;
    bad.n = 1;
    bad.terms.emplace(0, GaussianDyadic{1, 0, 1});
    CHECK_THROWS(apply_pauli_sum(basis_state(1, "0"), bad, {0}));
}

TEST_CASE("bell measurement of fresh pairs is uniform with identity residual") {
    for (int n = 1; n <= 3; ++n) {
        Statevector in = testutil::random_state(n, 17);
        Statevector joint;
        joint.m = 3 * n;
        Statevector bells = bell_pairs(n);
        joint.amps.assign(std::size_t(1) << (3 * n), cd(0, 0));
        for (std::size_t x = 0; x < in.amps.size(); ++x) {
            for (std::size_t y = 0; y < bells.amps.size(); ++y) {
                joint.amps[(x << (2 * n)) | y] = in.amps[x] * bells.amps[y];
            }
        }
        std::vector<std::pair<int, int>> pairs(n);
        for (int i = 0; i < n; ++i) pairs[i] = {i, n + i};
        auto branches = bell_branches(joint, pairs);
        REQUIRE(branches.size() == (std::size_t(1) << (2 * n)));
        double total = 0;
        for (const auto& br : branches) {
            total += br.probability;
            CHECK(br.probability ==
                  doctest::Approx(1.0 / double(std::size_t(1) << (2 * n))).epsilon(1e-12));
            // Undo the byproduct X^b Z^a and compare with the input.
            Statevector fixed = br.residual;
            std::vector<int> wires(n);
            for (int i = 0; i < n; ++i) wires[i] = i;
            Statevector undone = apply_pauli(fixed, br.outcome, wires);
            // apply_pauli applies X^b Z^a; (X^b Z^a)(X^b Z^a) = +-1, so
            // fidelity is the right phase-free check.
            CHECK(fidelity(undone, in) == doctest::Approx(1.0).epsilon(1e-10));
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("branch probabilities always sum to one") {
    Statevector s = testutil::random_state(4, 23);
    auto branches = bell_branches(s, {{0, 2}, {1, 3}});
    double total = 0;
    for (const auto& br : branches) total += br.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bell_measure is deterministic in the seed") {
    Statevector s = testutil::random_state(4, 5);
    BellBranch a = bell_measure(s, {{0, 2}, {1, 3}}, 42);
    BellBranch b = bell_measure(s, {{0, 2}, {1, 3}}, 42);
    CHECK(a.outcome == b.outcome);
    CHECK(a.probability == b.probability);
}

TEST_CASE("fidelity") {
    Statevector a = basis_state(1, "0");
    Statevector b = basis_state(1, "1");
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
    CHECK(fidelity(a, b) == doctest::Approx(0.0));
    Statevector ia = a;
    ia.amps[0] = cd(0, 1);
    CHECK(fidelity(a, ia) == doctest::Approx(1.0));  // global phase free
}

TEST_CASE("dump and parse round trip") {
    Statevector s = testutil::random_state(3, 77);
    Statevector r = parse_state(dump_state(s));
    CHECK(r.m == 3);
    for (std::size_t i = 0; i < s.amps.size(); ++i) CHECK(s.amps[i] == r.amps[i]);
    CHECK(dump_state(basis_state(2, "01")) == "state m=2\n01 1 0\n");
    CHECK_THROWS(parse_state("junk"));
}
