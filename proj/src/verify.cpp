#include "qio/verify.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace qio {

namespace {

using cd = std::complex<double>;

// Left-multiply U by a single-qubit gate embedded on `wire` (qubit 0 is the
// most significant index bit, same convention as the simulator).
void lmul_single(DenseUnitary& u, int n, int wire, const cd g[2][2]) {
    std::size_t b = std::size_t(1) << (n - 1 - wire);
    for (std::size_t r = 0; r < u.dim; ++r) {
        if (r & b) continue;
        for (std::size_t c = 0; c < u.dim; ++c) {
            cd u0 = u.at(r, c), u1 = u.at(r | b, c);
            u.at(r, c) = g[0][0] * u0 + g[0][1] * u1;
            u.at(r | b, c) = g[1][0] * u0 + g[1][1] * u1;
        }
    }
}

void lmul_cnot(DenseUnitary& u, int n, int control, int target) {
    std::size_t cb = std::size_t(1) << (n - 1 - control);
    std::size_t tb = std::size_t(1) << (n - 1 - target);
    for (std::size_t r = 0; r < u.dim; ++r) {
        if ((r & cb) && !(r & tb)) {
            for (std::size_t c = 0; c < u.dim; ++c) std::swap(u.at(r, c), u.at(r | tb, c));
        }
    }
}

}  // namespace

DenseUnitary identity_unitary(int n) {
    DenseUnitary u;
    u.dim = std::size_t(1) << n;
    u.entries.assign(u.dim * u.dim, cd(0, 0));
    for (std::size_t i = 0; i < u.dim; ++i) u.at(i, i) = 1.0;
    return u;
}

DenseUnitary circuit_unitary(const Circuit& c) {
    if (c.n > kOracleQubitCap) {
        throw std::invalid_argument("circuit_unitary: oracle qubit cap exceeded");
    }
    const double isq2 = 1.0 / std::numbers::sqrt2;
    const cd t7 = std::polar(1.0, std::numbers::pi / 4);
    const cd mx[2][2] = {{0, 1}, {1, 0}};
    const cd mz[2][2] = {{1, 0}, {0, -1}};
    const cd mp[2][2] = {{1, 0}, {0, cd(0, 1)}};
    const cd mh[2][2] = {{isq2, isq2}, {isq2, -isq2}};
    const cd mt[2][2] = {{1, 0}, {0, t7}};
    DenseUnitary u = identity_unitary(c.n);
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X: lmul_single(u, c.n, g.wire, mx); break;
            case GateKind::Z: lmul_single(u, c.n, g.wire, mz); break;
            case GateKind::P: lmul_single(u, c.n, g.wire, mp); break;
            case GateKind::H: lmul_single(u, c.n, g.wire, mh); break;
            case GateKind::T: lmul_single(u, c.n, g.wire, mt); break;
            case GateKind::CNOT: lmul_cnot(u, c.n, g.wire, g.wire2); break;
        }
    }
    return u;
}

DenseUnitary pauli_unitary(const PauliLabel& label) {
    int n = label.n;
    std::size_t amask = 0, bmask = 0;
    for (int i = 0; i < n; ++i) {
        if (label.a(i)) amask |= std::size_t(1) << (n - 1 - i);
        if (label.b(i)) bmask |= std::size_t(1) << (n - 1 - i);
    }
    DenseUnitary u;
    u.dim = std::size_t(1) << n;
    u.entries.assign(u.dim * u.dim, cd(0, 0));
    for (std::size_t x = 0; x < u.dim; ++x) {
        double sign = (std::popcount(x & amask) & 1) ? -1.0 : 1.0;
        u.at(x ^ bmask, x) = sign;  // (X^b Z^a)|x> = (-1)^{a.x} |x ^ b>
    }
    return u;
}

DenseUnitary pauli_sum_unitary(const PauliSum& ps) {
    DenseUnitary u;
    u.dim = std::size_t(1) << ps.n;
    u.entries.assign(u.dim * u.dim, cd(0, 0));
    for (const auto& [key, coeff] : ps.terms) {
        DenseUnitary term = pauli_unitary(PauliLabel::from_key(ps.n, key));
        cd beta(coeff.real(), coeff.imag());
        for (std::size_t i = 0; i < u.entries.size(); ++i) u.entries[i] += beta * term.entries[i];
    }
    return u;
}

DenseUnitary matmul(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dim != b.dim) throw std::invalid_argument("matmul: dimension mismatch");
    DenseUnitary r;
    r.dim = a.dim;
    r.entries.assign(a.dim * a.dim, cd(0, 0));
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            cd aik = a.at(i, k);
            if (aik == cd(0, 0)) continue;
            for (std::size_t j = 0; j < a.dim; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

bool equal_up_to_phase(const DenseUnitary& u, const DenseUnitary& v, double tol) {
    if (u.dim != v.dim) throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
    std::size_t pivot = 0;
    double best = -1;
    for (std::size_t i = 0; i < u.entries.size(); ++i) {
        if (std::abs(u.entries[i]) > best) {
            best = std::abs(u.entries[i]);
            pivot = i;
        }
    }
    if (best <= tol) return true;  // both must be ~zero then
    if (std::abs(v.entries[pivot]) < 1e-300) return false;
    cd lambda = u.entries[pivot] / v.entries[pivot];
    if (std::abs(std::abs(lambda) - 1.0) > 1e-6) return false;
    for (std::size_t i = 0; i < u.entries.size(); ++i) {
        if (std::abs(u.entries[i] - lambda * v.entries[i]) > tol) return false;
    }
    return true;
}

bool check_conjugation(const Circuit& c, const PauliLabel& s, const PauliSum& ps, double tol) {
    DenseUnitary uc = circuit_unitary(c);
    DenseUnitary lhs = matmul(pauli_sum_unitary(ps), uc);
    DenseUnitary rhs = matmul(uc, pauli_unitary(s));
    for (std::size_t i = 0; i < lhs.entries.size(); ++i) {
        if (std::abs(lhs.entries[i] - rhs.entries[i]) > tol) return false;
    }
    return true;
}

bool update_functions_equal(const Circuit& c1, const Circuit& c2) {
    if (c1.n != c2.n) throw std::invalid_argument("update_functions_equal: qubit mismatch");
    if (c1.n > 3) throw std::invalid_argument("update_functions_equal: capped at n <= 3");
    for (std::uint32_t key = 0; key < (1u << (2 * c1.n)); ++key) {
        PauliLabel s = PauliLabel::from_key(c1.n, key);
        if (!(propagate(c1, s) == propagate(c2, s))) return false;
    }
    return true;
}

}  // namespace qio
