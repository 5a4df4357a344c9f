#include "qio/pauli_sum.hpp"

#include <sstream>

namespace qio {

namespace {

struct KeyBits {
    int n;
    int a_pos(int wire) const { return 2 * n - 1 - 2 * wire; }
    int b_pos(int wire) const { return 2 * n - 2 - 2 * wire; }
    int a(std::uint32_t key, int wire) const { return (key >> a_pos(wire)) & 1u; }
    int b(std::uint32_t key, int wire) const { return (key >> b_pos(wire)) & 1u; }
    std::uint32_t flip_a(std::uint32_t key, int wire) const {
        return key ^ (1u << a_pos(wire));
    }
    std::uint32_t flip_b(std::uint32_t key, int wire) const {
        return key ^ (1u << b_pos(wire));
    }
};

void add_term(std::map<std::uint32_t, GaussianDyadic>& m, std::uint32_t key,
              const GaussianDyadic& c) {
    auto [it, inserted] = m.emplace(key, c);
    if (!inserted) {
        it->second = gd_add(it->second, c);
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

PauliSum propagate(const Circuit& c, const PauliLabel& s, std::size_t term_limit) {
    if (s.n != c.n) throw std::invalid_argument("label length does not match circuit");
    KeyBits kb{c.n};
    PauliSum ps;
    ps.n = c.n;
    ps.terms.emplace(s.key(), GaussianDyadic::one());
    for (const Gate& g : c.gates) {
        std::map<std::uint32_t, GaussianDyadic> next;
        for (const auto& [key, coeff] : ps.terms) {
            switch (g.kind) {
                case GateKind::X:
                    // X (X^b Z^a) X = (-1)^a X^b Z^a
                    add_term(next, key, kb.a(key, g.wire) ? gd_neg(coeff) : coeff);
                    break;
                case GateKind::Z:
                    // Z (X^b Z^a) Z = (-1)^b X^b Z^a
                    add_term(next, key, kb.b(key, g.wire) ? gd_neg(coeff) : coeff);
                    break;
                case GateKind::H: {
                    // H (X^b Z^a) H = (-1)^{ab} X^a Z^b
                    int a = kb.a(key, g.wire), b = kb.b(key, g.wire);
                    std::uint32_t nk = key;
                    if (a != b) nk = kb.flip_b(kb.flip_a(nk, g.wire), g.wire);
                    add_term(next, nk, (a & b) ? gd_neg(coeff) : coeff);
                    break;
                }
                case GateKind::P: {
                    // P (X^b Z^a) P^+ = i^b X^b Z^{a^b}
                    int b = kb.b(key, g.wire);
                    std::uint32_t nk = b ? kb.flip_a(key, g.wire) : key;
                    add_term(next, nk, gd_mul_i_pow(coeff, b));
                    break;
                }
                case GateKind::CNOT: {
                    // a_c ^= a_t, b_t ^= b_c; no phase.
                    std::uint32_t nk = key;
                    if (kb.a(key, g.wire2)) nk = kb.flip_a(nk, g.wire);
                    if (kb.b(key, g.wire)) nk = kb.flip_b(nk, g.wire2);
                    add_term(next, nk, coeff);
                    break;
                }
                case GateKind::T: {
                    if (kb.b(key, g.wire) == 0) {
                        add_term(next, key, coeff);
                    } else {
                        // T X Z^a T^+ = (i/sqrt2) X Z^{a^1} + (1/sqrt2) X Z^a.
                        // (The familiar (1+-i)/2 pair is this times e^{i pi/4};
                        // per-term the phase matters, so keep it exact.)
                        GaussianDyadic half = gd_div_sqrt2(coeff);
                        add_term(next, kb.flip_a(key, g.wire), gd_mul_i_pow(half, 1));
                        add_term(next, key, half);
                    }
                    break;
                }
            }
            if (next.size() > term_limit) {
                throw TermLimitError("Pauli-sum term count exceeds limit of " +
                                     std::to_string(term_limit));
            }
        }
        ps.terms = std::move(next);
    }
    return ps;
}

GaussianDyadic parseval(const PauliSum& ps) {
    GaussianDyadic sum = GaussianDyadic::zero();
    for (const auto& [key, coeff] : ps.terms) sum = gd_add(sum, gd_norm_sq(coeff));
    return sum;
}

PauliSum ps_adjoint(const PauliSum& ps) {
    KeyBits kb{ps.n};
    PauliSum out;
    out.n = ps.n;
    for (const auto& [key, coeff] : ps.terms) {
        int sign = 0;
        for (int i = 0; i < ps.n; ++i) sign ^= kb.a(key, i) & kb.b(key, i);
        GaussianDyadic c = gd_conj(coeff);
        out.terms.emplace(key, sign ? gd_neg(c) : c);
    }
    return out;
}

std::string dump_pauli_sum(const PauliSum& ps) {
    std::ostringstream out;
    for (const auto& [key, coeff] : ps.terms) {
        out << PauliLabel::from_key(ps.n, key).to_string() << ' ' << coeff.p << ' ' << coeff.q
            << ' ' << coeff.u << ' ' << coeff.v << ' ' << coeff.k << '\n';
    }
    return out.str();
}

}  // namespace qio
