#include "qio/obfuscate.hpp"

#include <cstdio>

#include "json.hpp"
#include "qio/tableau.hpp"

namespace qio {

namespace {

using ordered_json = nlohmann::ordered_json;
using cd = std::complex<double>;

constexpr int kTeleportQubitCap = kSimQubitCap / 3;

void check_teleport_n(int n) {
    if (n > kTeleportQubitCap) {
        throw CapError("teleport schemes are capped at n <= " +
                       std::to_string(kTeleportQubitCap) + " (simulator limit)");
    }
}

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Statevector teleport_aux(const Circuit& c) {
    Statevector bells = bell_pairs(c.n);
    std::vector<int> side_b(c.n);
    for (int i = 0; i < c.n; ++i) side_b[i] = c.n + i;
    return apply_circuit(bells, c, side_b);
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Canonical: return "canonical";
        case Scheme::TeleportClifford: return "teleport-clifford";
        case Scheme::TeleportGeneral: return "teleport-general";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "canonical") return Scheme::Canonical;
    if (name == "teleport-clifford") return Scheme::TeleportClifford;
    if (name == "teleport-general") return Scheme::TeleportGeneral;
    throw std::invalid_argument("unknown scheme '" + name + "'");
}

ObfuscatedProgram qio_canonical(const Circuit& c) {
    ObfuscatedProgram p;
    p.scheme = Scheme::Canonical;
    p.n = c.n;
    p.canonical = canonical_synthesize(from_circuit(c));
    return p;
}

ObfuscatedProgram qio_teleport_clifford(const Circuit& c) {
    check_teleport_n(c.n);
    ObfuscatedProgram p;
    p.scheme = Scheme::TeleportClifford;
    p.n = c.n;
    Circuit canon = canonical_synthesize(from_circuit(c));
    p.aux = teleport_aux(canon);
    p.correction = compile_update_circuit(canon);
    return p;
}

ObfuscatedProgram qio_teleport_general(const Circuit& c, std::size_t limit) {
    check_teleport_n(c.n);
    int t = t_count(c);
    if (t >= 64 || (std::size_t(1) << (2 * t)) > limit) {
        throw TCountError("T-count " + std::to_string(t) +
                          " exceeds the configured term limit (4^t > " +
                          std::to_string(limit) + ")");
    }
    ObfuscatedProgram p;
    p.scheme = Scheme::TeleportGeneral;
    p.n = c.n;
    p.aux = teleport_aux(c);
    for (std::uint32_t key = 0; key < (1u << (2 * c.n)); ++key) {
        p.table.emplace(key, propagate(c, PauliLabel::from_key(c.n, key), limit));
    }
    return p;
}

namespace {

Statevector joint_input_aux(const ObfuscatedProgram& p, const Statevector& input) {
    if (input.m != p.n) throw std::invalid_argument("input qubit count does not match program");
    Statevector joint;
    joint.m = 3 * p.n;
    joint.amps.assign(std::size_t(1) << joint.m, cd(0, 0));
    std::size_t aux_dim = std::size_t(1) << (2 * p.n);
    for (std::size_t x = 0; x < input.amps.size(); ++x) {
        if (input.amps[x] == cd(0, 0)) continue;
        for (std::size_t y = 0; y < aux_dim; ++y) {
            joint.amps[(x << (2 * p.n)) | y] = input.amps[x] * p.aux.amps[y];
        }
    }
    return joint;
}

std::vector<std::pair<int, int>> teleport_pairs(int n) {
    std::vector<std::pair<int, int>> pairs(n);
    for (int i = 0; i < n; ++i) pairs[i] = {i, n + i};  // (input wire, aux side-A wire)
    return pairs;
}

EvalReport finish_branch(const ObfuscatedProgram& p, const BellBranch& br) {
    EvalReport rep;
    rep.outcome = br.outcome;
    rep.branch_probability = br.probability;
    std::vector<int> wires(p.n);
    for (int i = 0; i < p.n; ++i) wires[i] = i;
    if (p.scheme == Scheme::TeleportClifford) {
        // Residual is C Pauli(s)|psi>; the correction Z^a' X^b' is the
        // inverse of the byproduct X^b' Z^a' up to global phase.
        PauliLabel corr = eval_update(p.correction, br.outcome);
        rep.output = apply_pauli(br.residual, corr, wires);
    } else {
        auto it = p.table.find(br.outcome.key());
        if (it == p.table.end()) {
            throw std::runtime_error("corrupt program: no correction for outcome " +
                                     br.outcome.to_string());
        }
        // The table entry V satisfies V U_c = U_c Pauli(s); the state needs
        // its adjoint: V^+ (U_c Pauli(s) |psi>) = U_c |psi>.
        rep.output = apply_pauli_sum(br.residual, ps_adjoint(it->second), wires);
    }
    return rep;
}

}  // namespace

EvalReport evaluate_sampled(const ObfuscatedProgram& p, const Statevector& input,
                            std::uint64_t seed) {
    if (p.scheme == Scheme::Canonical) {
        std::vector<int> wires(p.n);
        for (int i = 0; i < p.n; ++i) wires[i] = i;
        return {PauliLabel::zero(p.n), apply_circuit(input, p.canonical, wires), 1.0};
    }
    Statevector joint = joint_input_aux(p, input);
    return finish_branch(p, bell_measure(joint, teleport_pairs(p.n), seed));
}

EvalReport evaluate_branch(const ObfuscatedProgram& p, const Statevector& input,
                           const PauliLabel& outcome) {
    if (p.scheme == Scheme::Canonical) {
        if (outcome.key() != 0) {
            throw std::invalid_argument("canonical scheme has only the all-zero branch");
        }
        return evaluate_sampled(p, input, 0);
    }
    Statevector joint = joint_input_aux(p, input);
    auto branches = bell_branches(joint, teleport_pairs(p.n));
    for (const auto& br : branches) {
        if (br.outcome == outcome) {
            if (br.probability <= 1e-15) {
                throw std::invalid_argument("requested branch has zero probability");
            }
            return finish_branch(p, br);
        }
    }
    throw std::invalid_argument("no such branch: " + outcome.to_string());
}

std::vector<EvalReport> evaluate_all_branches(const ObfuscatedProgram& p,
                                              const Statevector& input) {
    if (p.scheme == Scheme::Canonical) return {evaluate_sampled(p, input, 0)};
    Statevector joint = joint_input_aux(p, input);
    std::vector<EvalReport> out;
    for (const auto& br : bell_branches(joint, teleport_pairs(p.n))) {
        if (br.probability <= 1e-15) continue;
        out.push_back(finish_branch(p, br));
    }
    return out;
}

std::vector<ObfuscatedProgram> obfuscate_k(const Circuit& c, int k, Scheme scheme,
                                           std::size_t limit) {
    std::vector<ObfuscatedProgram> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        switch (scheme) {
            case Scheme::Canonical: out.push_back(qio_canonical(c)); break;
            case Scheme::TeleportClifford: out.push_back(qio_teleport_clifford(c)); break;
            case Scheme::TeleportGeneral: out.push_back(qio_teleport_general(c, limit)); break;
        }
    }
    return out;
}

namespace {

ordered_json aux_to_json(const Statevector& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : s.amps) {
        arr.push_back(ordered_json::array({fmt17(a.real()), fmt17(a.imag())}));
    }
    return arr;
}

Statevector aux_from_json(const ordered_json& arr, int n) {
    Statevector s;
    s.m = 2 * n;
    std::size_t dim = std::size_t(1) << (2 * n);
    if (!arr.is_array() || arr.size() != dim) {
        throw std::invalid_argument("payload.aux: expected " + std::to_string(dim) +
                                    " amplitude pairs");
    }
    s.amps.reserve(dim);
    for (const auto& e : arr) {
        s.amps.emplace_back(std::stod(e.at(0).get<std::string>()),
                            std::stod(e.at(1).get<std::string>()));
    }
    return s;
}

const ordered_json& require(const ordered_json& j, const char* field, const char* path) {
    if (!j.contains(field)) {
        throw std::invalid_argument(std::string("missing field ") + path);
    }
    return j.at(field);
}

}  // namespace

std::string serialize_program(const ObfuscatedProgram& p) {
    ordered_json j;
    j["scheme"] = scheme_name(p.scheme);
    j["n"] = p.n;
    ordered_json payload;
    switch (p.scheme) {
        case Scheme::Canonical:
            payload["circuit"] = serialize_circuit(p.canonical);
            break;
        case Scheme::TeleportClifford:
            payload["aux"] = aux_to_json(p.aux);
            payload["correction"] = dump_update_circuit(p.correction);
            break;
        case Scheme::TeleportGeneral: {
            payload["aux"] = aux_to_json(p.aux);
            ordered_json table;
            for (const auto& [key, ps] : p.table) {
                ordered_json terms = ordered_json::array();
                for (const auto& [lkey, coeff] : ps.terms) {
                    terms.push_back(ordered_json::array(
                        {PauliLabel::from_key(p.n, lkey).to_string(), coeff.p, coeff.q,
                         coeff.u, coeff.v, coeff.k}));
                }
                table[PauliLabel::from_key(p.n, key).to_string()] = std::move(terms);
            }
            payload["table"] = std::move(table);
            break;
        }
    }
    j["payload"] = std::move(payload);
    return j.dump(2) + "\n";
}

ObfuscatedProgram deserialize_program(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ObfuscatedProgram p;
    p.scheme = scheme_from_name(require(j, "scheme", "scheme").get<std::string>());
    p.n = require(j, "n", "n").get<int>();
    const ordered_json& payload = require(j, "payload", "payload");
    switch (p.scheme) {
        case Scheme::Canonical:
            p.canonical =
                parse_circuit(require(payload, "circuit", "payload.circuit").get<std::string>());
            if (p.canonical.n != p.n) throw std::invalid_argument("payload.circuit: n mismatch");
            break;
        case Scheme::TeleportClifford:
            p.aux = aux_from_json(require(payload, "aux", "payload.aux"), p.n);
            p.correction = parse_update_circuit(
                require(payload, "correction", "payload.correction").get<std::string>());
            if (p.correction.n != p.n) {
                throw std::invalid_argument("payload.correction: n mismatch");
            }
            break;
        case Scheme::TeleportGeneral: {
            p.aux = aux_from_json(require(payload, "aux", "payload.aux"), p.n);
            const ordered_json& table = require(payload, "table", "payload.table");
            for (const auto& [label, terms] : table.items()) {
                PauliSum ps;
                ps.n = p.n;
                for (const auto& term : terms) {
                    PauliLabel l = PauliLabel::from_string(term.at(0).get<std::string>());
                    ps.terms.emplace(
                        l.key(), GaussianDyadic{term.at(1).get<std::int64_t>(),
                                                term.at(2).get<std::int64_t>(),
                                                term.at(3).get<std::int64_t>(),
                                                term.at(4).get<std::int64_t>(),
                                                term.at(5).get<int>()});
                }
                p.table.emplace(PauliLabel::from_string(label).key(), std::move(ps));
            }
            if (p.table.size() != (std::size_t(1) << (2 * p.n))) {
                throw std::invalid_argument("payload.table: expected 4^n entries");
            }
            break;
        }
    }
    return p;
}

}  // namespace qio
