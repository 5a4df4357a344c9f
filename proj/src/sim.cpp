#include "qio/sim.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

namespace qio {

namespace {

using cd = std::complex<double>;

std::size_t bit_of(int m, int qubit) { return std::size_t(1) << (m - 1 - qubit); }

void check_cap(int m) {
    if (m > kSimQubitCap) {
        throw CapError("state of " + std::to_string(m) + " qubits exceeds the cap of " +
                       std::to_string(kSimQubitCap));
    }
}

}  // namespace

double Statevector::norm_sq() const {
    double s = 0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

Statevector basis_state(int m, const std::string& bits) {
    if (static_cast<int>(bits.size()) != m) {
        throw std::invalid_argument("bit string length does not match qubit count");
    }
    check_cap(m);
    std::size_t idx = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bit string must be binary");
        idx = (idx << 1) | std::size_t(ch == '1');
    }
    Statevector s;
    s.m = m;
    s.amps.assign(std::size_t(1) << m, cd(0, 0));
    s.amps[idx] = 1.0;
    return s;
}

Statevector bell_pairs(int n) {
    if (n < 1) throw std::invalid_argument("bell_pairs: n must be >= 1");
    check_cap(2 * n);
    Statevector s;
    s.m = 2 * n;
    s.amps.assign(std::size_t(1) << (2 * n), cd(0, 0));
    double amp = 1.0 / std::sqrt(double(std::size_t(1) << n));
    for (std::size_t x = 0; x < (std::size_t(1) << n); ++x) {
        s.amps[(x << n) | x] = amp;  // side A bits == side B bits
    }
    return s;
}

namespace {

void apply_single(Statevector& s, const cd m00, const cd m01, const cd m10, const cd m11,
                  int qubit) {
    std::size_t b = bit_of(s.m, qubit);
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (i & b) continue;
        cd a0 = s.amps[i], a1 = s.amps[i | b];
        s.amps[i] = m00 * a0 + m01 * a1;
        s.amps[i | b] = m10 * a0 + m11 * a1;
    }
}

void apply_gate_sv(Statevector& s, const Gate& g, const std::vector<int>& wires) {
    const double isq2 = 1.0 / std::numbers::sqrt2;
    switch (g.kind) {
        case GateKind::X:
            apply_single(s, 0, 1, 1, 0, wires[g.wire]);
            break;
        case GateKind::Z:
            apply_single(s, 1, 0, 0, -1, wires[g.wire]);
            break;
        case GateKind::P:
            apply_single(s, 1, 0, 0, cd(0, 1), wires[g.wire]);
            break;
        case GateKind::H:
            apply_single(s, isq2, isq2, isq2, -isq2, wires[g.wire]);
            break;
        case GateKind::T:
            apply_single(s, 1, 0, 0, std::polar(1.0, std::numbers::pi / 4), wires[g.wire]);
            break;
        case GateKind::CNOT: {
            std::size_t cb = bit_of(s.m, wires[g.wire]);
            std::size_t tb = bit_of(s.m, wires[g.wire2]);
            for (std::size_t i = 0; i < s.amps.size(); ++i) {
                if ((i & cb) && !(i & tb)) std::swap(s.amps[i], s.amps[i | tb]);
            }
            break;
        }
    }
}

}  // namespace

Statevector apply_circuit(const Statevector& s, const Circuit& c,
                          const std::vector<int>& wires) {
    if (static_cast<int>(wires.size()) != c.n) {
        throw std::invalid_argument("wire list length does not match circuit");
    }
    for (int w : wires) {
        if (w < 0 || w >= s.m) throw std::invalid_argument("wire index out of range");
    }
    Statevector out = s;
    for (const Gate& g : c.gates) apply_gate_sv(out, g, wires);
    return out;
}

Statevector apply_pauli(const Statevector& s, const PauliLabel& label,
                        const std::vector<int>& wires) {
    std::size_t amask = 0, bmask = 0;
    for (int i = 0; i < label.n; ++i) {
        if (label.a(i)) amask |= bit_of(s.m, wires[i]);
        if (label.b(i)) bmask |= bit_of(s.m, wires[i]);
    }
    Statevector out;
    out.m = s.m;
    out.amps.assign(s.amps.size(), cd(0, 0));
    for (std::size_t x = 0; x < s.amps.size(); ++x) {
        // (X^b Z^a)|x> = (-1)^{a.x} |x ^ b>
        double sign = (std::popcount(x & amask) & 1) ? -1.0 : 1.0;
        out.amps[x ^ bmask] = sign * s.amps[x];
    }
    return out;
}

Statevector apply_pauli_sum(const Statevector& s, const PauliSum& ps,
                            const std::vector<int>& wires) {
    if (static_cast<int>(wires.size()) != ps.n) {
        throw std::invalid_argument("wire list length does not match Pauli sum");
    }
    if (!(parseval(ps) == GaussianDyadic::one())) {
        throw std::invalid_argument("apply_pauli_sum requires a unit-Parseval sum");
    }
    Statevector out;
    out.m = s.m;
    out.amps.assign(s.amps.size(), cd(0, 0));
    for (const auto& [key, coeff] : ps.terms) {
        PauliLabel label = PauliLabel::from_key(ps.n, key);
        Statevector term = apply_pauli(s, label, wires);
        cd beta(coeff.real(), coeff.imag());
        for (std::size_t i = 0; i < out.amps.size(); ++i) out.amps[i] += beta * term.amps[i];
    }
    double nrm = std::sqrt(out.norm_sq());
    if (nrm > 0) {
        for (auto& a : out.amps) a /= nrm;
    }
    return out;
}

std::vector<BellBranch> bell_branches(const Statevector& s,
                                      const std::vector<std::pair<int, int>>& pairs) {
    int n = static_cast<int>(pairs.size());
    std::vector<bool> used(s.m, false);
    for (auto [c, a] : pairs) {
        if (c < 0 || c >= s.m || a < 0 || a >= s.m || used[c] || used[a] || c == a) {
            throw std::invalid_argument("bell measurement pairs must be disjoint valid wires");
        }
        used[c] = used[a] = true;
    }
    int mr = s.m - 2 * n;
    std::vector<int> rest;
    for (int w = 0; w < s.m; ++w) {
        if (!used[w]) rest.push_back(w);
    }
    // Unnormalized residuals, one per 2n-bit outcome a_1 b_1 ... a_n b_n.
    std::vector<std::vector<cd>> res(std::size_t(1) << (2 * n),
                                     std::vector<cd>(std::size_t(1) << mr, cd(0, 0)));
    double scale = 1.0 / std::sqrt(double(std::size_t(1) << n));
    for (std::size_t idx = 0; idx < s.amps.size(); ++idx) {
        if (s.amps[idx] == cd(0, 0)) continue;
        std::size_t y = 0;
        for (int w : rest) y = (y << 1) | ((idx >> (s.m - 1 - w)) & 1u);
        // The C/A bits fix b_i = c_i ^ A_i; every a pattern contributes.
        std::uint32_t bvec = 0, cvec = 0;
        for (int i = 0; i < n; ++i) {
            std::size_t ci = (idx >> (s.m - 1 - pairs[i].first)) & 1u;
            std::size_t ai = (idx >> (s.m - 1 - pairs[i].second)) & 1u;
            cvec |= std::uint32_t(ci) << i;
            bvec |= std::uint32_t(ci ^ ai) << i;
        }
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
            double sign = (std::popcount(a & cvec) & 1) ? -1.0 : 1.0;
            std::uint32_t outcome = 0;
            for (int i = 0; i < n; ++i) {
                outcome |= ((a >> i) & 1u) << (2 * n - 1 - 2 * i);
                outcome |= ((bvec >> i) & 1u) << (2 * n - 2 - 2 * i);
            }
            res[outcome][y] += sign * scale * s.amps[idx];
        }
    }
    std::vector<BellBranch> out;
    out.reserve(res.size());
    for (std::uint32_t outcome = 0; outcome < res.size(); ++outcome) {
        BellBranch br;
        br.outcome = PauliLabel::from_key(n, outcome);
        double p = 0;
        for (const auto& a : res[outcome]) p += std::norm(a);
        br.probability = p;
        if (p > 1e-15) {
            br.residual.m = mr;
            br.residual.amps = std::move(res[outcome]);
            double nrm = std::sqrt(p);
            for (auto& a : br.residual.amps) a /= nrm;
        }
        out.push_back(std::move(br));
    }
    return out;
}

BellBranch bell_measure(const Statevector& s,
                        const std::vector<std::pair<int, int>>& pairs, std::uint64_t seed) {
    auto branches = bell_branches(s, pairs);
    std::mt19937_64 rng(seed);
    // 53-bit uniform in [0, 1); avoids distribution-object portability issues.
    double u = double(rng() >> 11) * 0x1.0p-53;
    double acc = 0;
    for (auto& br : branches) {
        acc += br.probability;
        if (u < acc) return std::move(br);
    }
    for (auto it = branches.rbegin(); it != branches.rend(); ++it) {
        if (it->probability > 0) return std::move(*it);
    }
    throw std::logic_error("bell_measure: no branch with positive probability");
}

double fidelity(const Statevector& a, const Statevector& b) {
    if (a.m != b.m) throw std::invalid_argument("fidelity: qubit counts differ");
    cd ov(0, 0);
    for (std::size_t i = 0; i < a.amps.size(); ++i) ov += std::conj(a.amps[i]) * b.amps[i];
    return std::norm(ov);
}

std::string dump_state(const Statevector& s) {
    std::ostringstream out;
    out << "state m=" << s.m << "\n";
    char buf[96];
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (s.amps[i] == cd(0, 0)) continue;
        std::string idx(s.m, '0');
        for (int q = 0; q < s.m; ++q) {
            if (i & bit_of(s.m, q)) idx[q] = '1';
        }
        std::snprintf(buf, sizeof buf, "%.17g %.17g", s.amps[i].real(), s.amps[i].imag());
        out << idx << ' ' << buf << '\n';
    }
    return out.str();
}

Statevector parse_state(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("state m=", 0) != 0) {
        throw std::invalid_argument("missing 'state m=<m>' header");
    }
    int m = std::stoi(line.substr(8));
    check_cap(m);
    Statevector s;
    s.m = m;
    s.amps.assign(std::size_t(1) << m, cd(0, 0));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string idx;
        double re, im;
        if (!(ls >> idx >> re >> im) || static_cast<int>(idx.size()) != m) {
            throw std::invalid_argument("bad state line: " + line);
        }
        std::size_t i = 0;
        for (char ch : idx) i = (i << 1) | std::size_t(ch == '1');
        s.amps[i] = cd(re, im);
    }
    return s;
}

}  // namespace qio
