// Acceptance gate: ten pinned criteria, one PASS/FAIL line each, nonzero
// exit when anything fails. Tolerances and runtime budgets are frozen here;
// loosening them is a regression, not a fix.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qio/obfuscate.hpp"
#include "qio/verify.hpp"
#include "test_util.hpp"

using namespace qio;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int crit, bool ok, const std::string& what) {
    std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", crit, what.c_str());
    if (!ok) ++failures;
}

std::string counts(int good, int total, double secs) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d/%d ok, %.2fs", good, total, secs);
    return buf;
}

// Entrywise amplitude agreement after dividing out one global phase.
bool states_equal_up_to_phase(const Statevector& u, const Statevector& v, double tol) {
    if (u.m != v.m) return false;
    std::size_t pivot = 0;
    double best = 0;
    for (std::size_t i = 0; i < u.amps.size(); ++i) {
        if (std::abs(u.amps[i]) > best) {
            best = std::abs(u.amps[i]);
            pivot = i;
        }
    }
    if (best == 0) return false;
    std::complex<double> lambda = v.amps[pivot] / u.amps[pivot];
    if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
    for (std::size_t i = 0; i < u.amps.size(); ++i) {
        if (std::abs(v.amps[i] - lambda * u.amps[i]) > tol) return false;
    }
    return true;
}

Statevector direct(const Circuit& c, const Statevector& in) {
    std::vector<int> wires(c.n);
    for (int i = 0; i < c.n; ++i) wires[i] = i;
    return apply_circuit(in, c, wires);
}

void criterion_1() {
    auto t0 = Clock::now();
    int good = 0;
    const int total = 200;
    for (int i = 0; i < total; ++i) {
        int n = 1 + i % 5;
        Circuit base = random_circuit(n, 45, 0, 1000 + i);
        auto [a, b] = equivalent_pair(base, i);
        if (a.size() > 60 || b.size() > 60) continue;  // must stay in budget
        if (serialize_program(qio_canonical(a)) == serialize_program(qio_canonical(b))) {
            ++good;
        }
    }
    double secs = seconds_since(t0);
    report(1, good == total && secs < 10.0,
           "canonical indistinguishability: " + counts(good, total, secs) + " (limit 10s)");
}

void criterion_2() {
    auto t0 = Clock::now();
    int good = 0;
    const int total = 100;
    for (int i = 0; i < total; ++i) {
        int n = 1 + i % 4;
        Circuit c = random_circuit(n, 20, 0, 2000 + i);
        ObfuscatedProgram p = qio_teleport_clifford(c);
        bool ok = true;
        for (int rep = 0; rep < 3 && ok; ++rep) {
            Statevector in = testutil::random_state(n, 3000 + 10 * i + rep);
            Statevector want = direct(c, in);
            auto branches = evaluate_all_branches(p, in);
            if (branches.size() != (std::size_t(1) << (2 * n))) ok = false;
            for (const auto& r : branches) {
                if (fidelity(r.output, want) < 1.0 - 1e-10) ok = false;
            }
        }
        if (ok) ++good;
    }
    double secs = seconds_since(t0);
    report(2, good == total && secs < 60.0,
           "teleport-clifford functionality (fid >= 1-1e-10): " + counts(good, total, secs) +
               " (limit 60s)");
}

void criterion_3() {
    auto t0 = Clock::now();
    int good = 0;
    const int total = 100;
    for (int i = 0; i < total; ++i) {
        int n = 1 + i % 4;
        Circuit base = random_circuit(n, 16, 0, 4000 + i);
        auto [a, b] = equivalent_pair(base, i);
        ObfuscatedProgram pa = qio_teleport_clifford(a);
        ObfuscatedProgram pb = qio_teleport_clifford(b);
        if (states_equal_up_to_phase(pa.aux, pb.aux, 1e-12) &&
            dump_update_circuit(pa.correction) == dump_update_circuit(pb.correction)) {
            ++good;
        }
    }
    report(3, good == total,
           "teleport-clifford indistinguishability (aux 1e-12, correction bytes): " +
               counts(good, total, seconds_since(t0)));
}

void criterion_4() {
    auto t0 = Clock::now();
    int good = 0;
    const int total = 50;
    for (int i = 0; i < total; ++i) {
        int n = 1 + i % 3;
        Circuit c = random_circuit(n, 15, 0, 5000 + i);
        bool ok = true;
        for (std::uint32_t key = 0; key < (1u << (2 * n)); ++key) {
            PauliLabel s = PauliLabel::from_key(n, key);
            if (!check_conjugation(c, s, propagate(c, s), 1e-9)) ok = false;
        }
        if (ok) ++good;
    }
    report(4, good == total,
           "update-function conjugation identity at 1e-9: " +
               counts(good, total, seconds_since(t0)));
}

// Criteria 5-7 share one corpus of 50 circuits (n <= 3, T-count <= 4).
void criteria_5_6_7() {
    auto t0 = Clock::now();
    int good5 = 0, good6 = 0, good7 = 0;
    const int total = 50;
    std::size_t observed_max_terms = 0;
    for (int i = 0; i < total; ++i) {
        int n = 1 + i % 3;
        int t = i % 5;
        Circuit c = random_circuit(n, 14, t, 6000 + i);
        ObfuscatedProgram p = qio_teleport_general(c);
        Statevector in = testutil::random_state(n, 7000 + i);
        Statevector want = direct(c, in);
        bool ok5 = true;
        for (const auto& r : evaluate_all_branches(p, in)) {
            if (fidelity(r.output, want) < 1.0 - 1e-9) ok5 = false;
        }
        if (ok5) ++good5;
        bool ok6 = true, ok7 = true;
        for (const auto& [key, ps] : p.table) {
            if (ps.terms.size() > (std::size_t(1) << (2 * t))) ok6 = false;
            observed_max_terms = std::max(observed_max_terms, ps.terms.size());
            for (const auto& [lk, coeff] : ps.terms) {
                if (coeff.k > t) ok7 = false;
            }
            if (!(parseval(ps) == GaussianDyadic::one())) ok7 = false;
        }
        if (ok6) ++good6;
        if (ok7) ++good7;
    }
    double secs = seconds_since(t0);
    report(5, good5 == total && secs < 300.0,
           "general-scheme functionality (fid >= 1-1e-9): " + counts(good5, total, secs) +
               " (limit 300s)");
    report(6, good6 == total,
           "term count <= 4^t over corpus; observed max " +
               std::to_string(observed_max_terms) + ": " + counts(good6, total, 0.0));
    report(7, good7 == total,
           "coefficient k <= t-count and exact Parseval = 1: " + counts(good7, total, 0.0));
}

void criterion_8() {
    auto t0 = Clock::now();
    int good = 0;
    const int total = 50;
    for (int i = 0; i < total; ++i) {
        int n = 1 + i % 2;
        Circuit base = random_circuit(n, 10, 1, 8000 + i);
        auto [a, b] = equivalent_pair(base, i, true);
        ObfuscatedProgram pa = qio_teleport_general(a);
        ObfuscatedProgram pb = qio_teleport_general(b);
        if (pa.table == pb.table && states_equal_up_to_phase(pa.aux, pb.aux, 1e-12)) {
            ++good;
        }
    }
    report(8, good == total,
           "general-scheme indistinguishability (exact tables, aux 1e-12): " +
               counts(good, total, seconds_since(t0)));
}

void criterion_9() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        ObfuscatedProgram p = qio_teleport_clifford(Circuit{n, {}});
        Statevector in = testutil::random_state(n, 9000 + n);
        double uniform = 1.0 / double(std::size_t(1) << (2 * n));
        auto reports = evaluate_all_branches(p, in);
        if (reports.size() != (std::size_t(1) << (2 * n))) ok = false;
        for (const auto& r : reports) {
            if (std::abs(r.branch_probability - uniform) > 1e-12) ok = false;
            if (!states_equal_up_to_phase(in, r.output, 1e-10)) ok = false;
        }
    }
    report(9, ok, "identity teleportation: uniform 4^-n branches, input reproduced (" +
                      counts(ok ? 3 : 0, 3, seconds_since(t0)) + ")");
}

void criterion_10() {
    auto t0 = Clock::now();
    // Frozen envelope for the canonical scheme: bytes <= 320 n^2 + 700.
    bool ok = true;
    std::size_t worst = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            Circuit c = random_circuit(n, 60, 0, 9500 + 10 * n + rep);
            std::size_t bytes = serialize_program(qio_canonical(c)).size();
            worst = std::max(worst, bytes);
            if (bytes > std::size_t(320 * n * n + 700)) ok = false;
        }
    }
    report(10, ok, "canonical program size within 320n^2+700 bytes (max seen " +
                       std::to_string(worst) + "): " + counts(ok ? 30 : 0, 30,
                                                             seconds_since(t0)));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criteria_5_6_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::printf("ACCEPTANCE: %d criteria failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 10 criteria passed\n");
    return 0;
}
