// Command-line front end: canonicalize / obfuscate / evaluate / verify-equiv
// / stats / run. All output is plain deterministic text so scripts can diff
// bytes. Exit codes: 0 ok, 1 inequivalent, 2 parse error, 3 non-Clifford,
// 4 term limit, 5 cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qio/obfuscate.hpp"
#include "qio/verify.hpp"

using namespace qio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInequivalent = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonClifford = 3;
constexpr int kExitTermLimit = 4;
constexpr int kExitCap = 5;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Circuit load_circuit(const std::string& path) { return parse_circuit(slurp(path)); }

// --input is either a basis bit string of length n or a path to a state dump.
Statevector load_input(const std::string& arg, int n) {
    bool binary = !arg.empty() && arg.find_first_not_of("01") == std::string::npos;
    if (binary && static_cast<int>(arg.size()) == n) return basis_state(n, arg);
    Statevector s = parse_state(slurp(arg));
    if (s.m != n) throw ParseError(0, "input state has " + std::to_string(s.m) +
                                          " qubits, program expects " + std::to_string(n));
    return s;
}

int cmd_canonicalize(const std::string& in) {
    std::cout << serialize_circuit(canonical_synthesize(from_circuit(load_circuit(in))));
    return kExitOk;
}

int cmd_obfuscate(const std::string& in, const std::string& scheme, const std::string& out,
                  std::size_t term_limit) {
    Circuit c = load_circuit(in);
    ObfuscatedProgram p;
    switch (scheme_from_name(scheme)) {
        case Scheme::Canonical: p = qio_canonical(c); break;
        case Scheme::TeleportClifford: p = qio_teleport_clifford(c); break;
        case Scheme::TeleportGeneral: p = qio_teleport_general(c, term_limit); break;
    }
    std::string text = serialize_program(p);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw ParseError(0, "cannot write " + out);
        f << text;
    }
    return kExitOk;
}

int cmd_evaluate(const std::string& prog_path, const std::string& input,
                 const std::string& branch, std::uint64_t seed) {
    ObfuscatedProgram p = deserialize_program(slurp(prog_path));
    Statevector in = load_input(input, p.n);
    EvalReport rep = branch.empty()
                         ? evaluate_sampled(p, in, seed)
                         : evaluate_branch(p, in, PauliLabel::from_string(branch));
    std::cout << "outcome " << rep.outcome.to_string() << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", rep.branch_probability);
    std::cout << "probability " << buf << "\n" << dump_state(rep.output);
    return kExitOk;
}

int cmd_run(const std::string& in, const std::string& input) {
    Circuit c = load_circuit(in);
    if (c.n > kSimQubitCap) throw CapError("circuit exceeds simulator cap");
    std::vector<int> wires(c.n);
    for (int i = 0; i < c.n; ++i) wires[i] = i;
    std::cout << dump_state(apply_circuit(load_input(input, c.n), c, wires));
    return kExitOk;
}

int cmd_verify_equiv(const std::string& pa, const std::string& pb) {
    Circuit a = load_circuit(pa);
    Circuit b = load_circuit(pb);
    if (a.n != b.n || a.n > kOracleQubitCap) {
        throw CapError("equivalence check needs matching n <= " +
                       std::to_string(kOracleQubitCap));
    }
    bool eq = equal_up_to_phase(circuit_unitary(a), circuit_unitary(b), 1e-9);
    if (eq && t_count(a) == 0 && t_count(b) == 0 && a.n <= 3) {
        eq = update_functions_equal(a, b);
    }
    std::cout << (eq ? "equivalent\n" : "inequivalent\n");
    return eq ? kExitOk : kExitInequivalent;
}

int cmd_stats(const std::string& in) {
    Circuit c = load_circuit(in);
    int t = t_count(c);
    std::cout << "qubits " << c.n << "\n"
              << "gates " << c.size() << "\n"
              << "t-count " << t << "\n"
              << "term-forecast " << (t >= 32 ? std::string("overflow")
                                              : std::to_string(std::size_t(1) << (2 * t)))
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-circuit obfuscation toolkit"};
    app.require_subcommand(1);

    std::string in, in_b, out, scheme = "canonical", input, branch;
    std::uint64_t seed = 0;
    std::size_t term_limit = kDefaultTermLimit;

    auto* canon = app.add_subcommand("canonicalize", "print the canonical Clifford circuit");
    canon->add_option("circuit", in, "input .qc file")->required();

    auto* obf = app.add_subcommand("obfuscate", "produce an obfuscated program");
    obf->add_option("circuit", in, "input .qc file")->required();
    obf->add_option("--scheme", scheme, "canonical | teleport-clifford | teleport-general");
    obf->add_option("--out", out, "output file (stdout when omitted)");
    obf->add_option("--term-limit", term_limit, "Pauli-sum term limit");

    auto* ev = app.add_subcommand("evaluate", "run an obfuscated program on an input");
    ev->add_option("program", in, "program file")->required();
    ev->add_option("--input", input, "basis bit string or state-dump file")->required();
    ev->add_option("--branch", branch, "pin a Bell outcome (2n bits)");
    ev->add_option("--seed", seed, "PRNG seed for sampled evaluation");

    auto* run = app.add_subcommand("run", "directly simulate a circuit");
    run->add_option("circuit", in, "input .qc file")->required();
    run->add_option("--input", input, "basis bit string or state-dump file")->required();

    auto* veq = app.add_subcommand("verify-equiv", "check two circuits for equivalence");
    veq->add_option("a", in, "first .qc file")->required();
    veq->add_option("b", in_b, "second .qc file")->required();

    auto* st = app.add_subcommand("stats", "circuit size and correction forecast");
    st->add_option("circuit", in, "input .qc file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (canon->parsed()) return cmd_canonicalize(in);
        if (obf->parsed()) return cmd_obfuscate(in, scheme, out, term_limit);
        if (ev->parsed()) return cmd_evaluate(in, input, branch, seed);
        if (run->parsed()) return cmd_run(in, input);
        if (veq->parsed()) return cmd_verify_equiv(in, in_b);
        if (st->parsed()) return cmd_stats(in);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NonCliffordError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonClifford;
    } catch (const TCountError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTermLimit;
    } catch (const TermLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTermLimit;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
