#include "qio/update.hpp"

#include <sstream>

namespace qio {

PauliLabel PauliLabel::from_key(int n, std::uint32_t key) {
    PauliLabel l = zero(n);
    for (int j = 0; j < 2 * n; ++j) {
        l.bits[j] = (key >> (2 * n - 1 - j)) & 1u;
    }
    return l;
}

PauliLabel PauliLabel::from_string(const std::string& s) {
    if (s.size() % 2 != 0 || s.empty()) {
        throw std::invalid_argument("label must be a nonempty even-length bit string");
    }
    PauliLabel l = zero(static_cast<int>(s.size() / 2));
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] != '0' && s[j] != '1') throw std::invalid_argument("label must be binary");
        l.bits[j] = s[j] == '1';
    }
    return l;
}

std::uint32_t PauliLabel::key() const {
    std::uint32_t k = 0;
    for (int j = 0; j < 2 * n; ++j) k = (k << 1) | bits[j];
    return k;
}

std::string PauliLabel::to_string() const {
    std::string s(2 * n, '0');
    for (int j = 0; j < 2 * n; ++j) s[j] = bits[j] ? '1' : '0';
    return s;
}

PauliLabel gate_update(const PauliLabel& label, const Gate& g) {
    PauliLabel l = label;
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Z:
            break;
        case GateKind::H: {
            std::uint8_t a = l.a(g.wire), b = l.b(g.wire);
            l.set_a(g.wire, b);
            l.set_b(g.wire, a);
            break;
        }
        case GateKind::P:
            // P X^b Z^a P^+ ~ X^b Z^{a^b}
            l.set_a(g.wire, l.a(g.wire) ^ l.b(g.wire));
            break;
        case GateKind::CNOT: {
            // (a1,b1,a2,b2) -> (a1^a2, b1, a2, b1^b2), wire1 = control.
            l.set_a(g.wire, l.a(g.wire) ^ l.a(g.wire2));
            l.set_b(g.wire2, l.b(g.wire) ^ l.b(g.wire2));
            break;
        }
        case GateKind::T:
            throw NonCliffordError("T gate has no Pauli-label update rule");
    }
    return l;
}

PauliLabel compose_update(const Circuit& c, const PauliLabel& label) {
    PauliLabel l = label;
    for (const Gate& g : c.gates) l = gate_update(l, g);
    return l;
}

UpdateCircuit compile_update_circuit(const Circuit& c) {
    UpdateCircuit u;
    u.n = c.n;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::Z:
                break;
            case GateKind::H:
                u.ops.push_back({UpdateOpKind::SWAP, 2 * g.wire, 2 * g.wire + 1});
                break;
            case GateKind::P:
                u.ops.push_back({UpdateOpKind::XOR, 2 * g.wire + 1, 2 * g.wire});
                break;
            case GateKind::CNOT:
                u.ops.push_back({UpdateOpKind::XOR, 2 * g.wire2, 2 * g.wire});
                u.ops.push_back({UpdateOpKind::XOR, 2 * g.wire + 1, 2 * g.wire2 + 1});
                break;
            case GateKind::T:
                throw NonCliffordError("cannot compile update circuit for T");
        }
    }
    return u;
}

UpdateCircuit io_update(const Circuit& c) {
    return compile_update_circuit(canonical_synthesize(from_circuit(c)));
}

PauliLabel eval_update(const UpdateCircuit& u, const PauliLabel& input) {
    if (input.n != u.n) throw std::invalid_argument("label length does not match program");
    PauliLabel l = input;
    for (const UpdateOp& op : u.ops) {
        if (op.kind == UpdateOpKind::SWAP) std::swap(l.bits[op.r1], l.bits[op.r2]);
        else l.bits[op.r2] = l.bits[op.r2] ^ l.bits[op.r1];
    }
    return l;
}

std::string dump_update_circuit(const UpdateCircuit& u) {
    std::ostringstream out;
    out << "update n=" << u.n << "\n";
    for (const UpdateOp& op : u.ops) {
        out << (op.kind == UpdateOpKind::SWAP ? "SWAP " : "XOR ") << op.r1 << ' ' << op.r2
            << '\n';
    }
    return out.str();
}

UpdateCircuit parse_update_circuit(const std::string& text) {
    UpdateCircuit u;
    std::istringstream hdr(text);
    std::string line;
    if (!std::getline(hdr, line) || line.rfind("update n=", 0) != 0) {
        throw std::invalid_argument("missing 'update n=<n>' header");
    }
    u.n = std::stoi(line.substr(9));
    while (std::getline(hdr, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        int r1, r2;
        if (!(ls >> kind >> r1 >> r2)) throw std::invalid_argument("bad update op: " + line);
        if (kind == "SWAP") u.ops.push_back({UpdateOpKind::SWAP, r1, r2});
        else if (kind == "XOR") u.ops.push_back({UpdateOpKind::XOR, r1, r2});
        else throw std::invalid_argument("bad update op kind: " + kind);
        if (r1 < 0 || r1 >= 2 * u.n || r2 < 0 || r2 >= 2 * u.n) {
            throw std::invalid_argument("register out of range: " + line);
        }
    }
    return u;
}

}  // namespace qio
