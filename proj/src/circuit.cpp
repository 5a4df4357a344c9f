#include "qio/circuit.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qio {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::P: return "P";
        case GateKind::H: return "H";
        case GateKind::T: return "T";
        case GateKind::CNOT: return "CNOT";
    }
    return "?";
}

namespace {

void check_wire(int w, int n, int line) {
    if (w < 0 || w >= n) {
        throw ParseError(line, "wire " + std::to_string(w) + " out of range [0, " +
                                   std::to_string(n) + ")");
    }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Circuit c;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (!have_header) {
            if (tok != "qubits") throw ParseError(lineno, "missing 'qubits <n>' header");
            int n;
            if (!(ls >> n) || n < 1) throw ParseError(lineno, "bad qubit count");
            c.n = n;
            have_header = true;
            continue;
        }
        if (tok == "CNOT") {
            int a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, "CNOT needs two wires");
            check_wire(a, c.n, lineno);
            check_wire(b, c.n, lineno);
            if (a == b) throw ParseError(lineno, "CNOT control equals target");
            c.gates.push_back(Gate::cnot(a, b));
        } else {
            GateKind k;
            if (tok == "X") k = GateKind::X;
            else if (tok == "Z") k = GateKind::Z;
            else if (tok == "P") k = GateKind::P;
            else if (tok == "H") k = GateKind::H;
            else if (tok == "T") k = GateKind::T;
            else throw ParseError(lineno, "unknown gate '" + tok + "'");
            int w;
            if (!(ls >> w)) throw ParseError(lineno, "gate needs a wire");
            check_wire(w, c.n, lineno);
            c.gates.push_back(Gate::single(k, w));
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    }
    if (!have_header) throw ParseError(lineno, "missing 'qubits <n>' header");
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n << "\n";
    for (const Gate& g : c.gates) {
        out << gate_name(g.kind) << ' ' << g.wire;
        if (g.kind == GateKind::CNOT) out << ' ' << g.wire2;
        out << '\n';
    }
    return out.str();
}

int t_count(const Circuit& c) {
    return static_cast<int>(
        std::count_if(c.gates.begin(), c.gates.end(),
                      [](const Gate& g) { return g.kind == GateKind::T; }));
}

namespace {

Gate random_clifford_gate(int n, std::mt19937_64& rng) {
    int kinds = n >= 2 ? 5 : 4;
    int pick = static_cast<int>(rng() % kinds);
    if (pick == 4) {
        int c = static_cast<int>(rng() % n);
        int t = static_cast<int>(rng() % (n - 1));
        if (t >= c) ++t;
        return Gate::cnot(c, t);
    }
    static const GateKind table[4] = {GateKind::X, GateKind::Z, GateKind::P, GateKind::H};
    return Gate::single(table[pick], static_cast<int>(rng() % n));
}

}  // namespace

Circuit random_circuit(int n, int len, int t, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_circuit: n must be >= 1");
    if (t > len) throw std::invalid_argument("random_circuit: t_count exceeds length");
    std::mt19937_64 rng(seed);
    std::vector<int> pos(len);
    for (int i = 0; i < len; ++i) pos[i] = i;
    for (int i = len - 1; i > 0; --i) {
        std::swap(pos[i], pos[rng() % (i + 1)]);
    }
    std::vector<bool> is_t(len, false);
    for (int i = 0; i < t; ++i) is_t[pos[i]] = true;
    Circuit c;
    c.n = n;
    c.gates.reserve(len);
    for (int i = 0; i < len; ++i) {
        if (is_t[i]) c.gates.push_back(Gate::single(GateKind::T, static_cast<int>(rng() % n)));
        else c.gates.push_back(random_clifford_gate(n, rng));
    }
    return c;
}

namespace {

bool disjoint(const Gate& a, const Gate& b) {
    auto touches = [](const Gate& g, int w) {
        return g.wire == w || (g.kind == GateKind::CNOT && g.wire2 == w);
    };
    if (touches(b, a.wire)) return false;
    if (a.kind == GateKind::CNOT && touches(b, a.wire2)) return false;
    return true;
}

// Identity-acting gate sequences used as insertions (all even length).
std::vector<Gate> identity_sequence(int n, std::mt19937_64& rng) {
    int w = static_cast<int>(rng() % n);
    switch (rng() % (n >= 2 ? 5 : 4)) {
        case 0: return {Gate::single(GateKind::H, w), Gate::single(GateKind::H, w)};
        case 1: return {Gate::single(GateKind::X, w), Gate::single(GateKind::X, w)};
        case 2: return {Gate::single(GateKind::Z, w), Gate::single(GateKind::Z, w)};
        case 3:
            return {Gate::single(GateKind::P, w), Gate::single(GateKind::P, w),
                    Gate::single(GateKind::P, w), Gate::single(GateKind::P, w)};
        default: {
            int t = static_cast<int>(rng() % (n - 1));
            if (t >= w) ++t;
            return {Gate::cnot(w, t), Gate::cnot(w, t)};
        }
    }
}

Circuit mutate(const Circuit& base, std::mt19937_64& rng, bool with_t) {
    Circuit c = base;
    if (with_t) {
        // Insert P,P,P,P (identity) and rewrite the first P as T,T (T^2 = P).
        int w = static_cast<int>(rng() % c.n);
        std::size_t at = c.gates.empty() ? 0 : rng() % (c.gates.size() + 1);
        std::vector<Gate> seq = {Gate::single(GateKind::T, w), Gate::single(GateKind::T, w),
                                 Gate::single(GateKind::P, w), Gate::single(GateKind::P, w),
                                 Gate::single(GateKind::P, w)};
        c.gates.insert(c.gates.begin() + at, seq.begin(), seq.end());
    }
    int inserts = static_cast<int>(rng() % 3);
    for (int i = 0; i < inserts; ++i) {
        auto seq = identity_sequence(c.n, rng);
        std::size_t at = c.gates.empty() ? 0 : rng() % (c.gates.size() + 1);
        c.gates.insert(c.gates.begin() + at, seq.begin(), seq.end());
    }
    // Swap a few adjacent gates acting on disjoint wires.
    int swaps = static_cast<int>(rng() % 4);
    for (int i = 0; i < swaps && c.gates.size() >= 2; ++i) {
        std::size_t at = rng() % (c.gates.size() - 1);
        if (disjoint(c.gates[at], c.gates[at + 1])) std::swap(c.gates[at], c.gates[at + 1]);
    }
    return c;
}

}  // namespace

std::pair<Circuit, Circuit> equivalent_pair(const Circuit& base, std::uint64_t seed,
                                            bool with_t) {
    std::mt19937_64 rng(seed);
    Circuit a = mutate(base, rng, with_t);
    Circuit b = mutate(base, rng, with_t);
    // Pad the shorter with X,X pairs; both sides differ from base by even counts.
    std::size_t target = std::max(a.gates.size(), b.gates.size());
    for (Circuit* c : {&a, &b}) {
        while (c->gates.size() < target) {
            c->gates.push_back(Gate::single(GateKind::X, 0));
            c->gates.push_back(Gate::single(GateKind::X, 0));
        }
    }
    return {a, b};
}

}  // namespace qio
