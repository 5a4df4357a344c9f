#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qio {

/// Exact complex number (p + u*sqrt2 + (q + v*sqrt2)*i) / 2^k. This is the
/// coefficient ring of Clifford+T Pauli conjugation: Clifford gates
/// contribute units {+-1, +-i} and each T split multiplies by 1/sqrt2 or
/// i/sqrt2, so exact propagation needs the sqrt2 components (paths with
/// different split counts can merge into one term). Plain dyadic values
/// keep u = v = 0. Normalized so that k = 0 or not all of p, u, q, v are
/// even; zero is all-zero. Closed under + and *.
struct GaussianDyadic {
    std::int64_t p = 0;  // rational real numerator
    std::int64_t q = 0;  // rational imaginary numerator
    std::int64_t u = 0;  // sqrt2 real numerator
    std::int64_t v = 0;  // sqrt2 imaginary numerator
    int k = 0;

    constexpr GaussianDyadic() = default;
    constexpr GaussianDyadic(std::int64_t p_, std::int64_t q_, int k_)
        : p(p_), q(q_), k(k_) {}
    constexpr GaussianDyadic(std::int64_t p_, std::int64_t q_, std::int64_t u_,
                             std::int64_t v_, int k_)
        : p(p_), q(q_), u(u_), v(v_), k(k_) {}

    static constexpr GaussianDyadic zero() { return {0, 0, 0}; }
    static constexpr GaussianDyadic one() { return {1, 0, 0}; }
    static constexpr GaussianDyadic i() { return {0, 1, 0}; }
    static constexpr GaussianDyadic half_one_plus_i() { return {1, 1, 1}; }
    static constexpr GaussianDyadic half_one_minus_i() { return {1, -1, 1}; }
    /// 1/sqrt2 and i/sqrt2: the exact T-split factors.
    static constexpr GaussianDyadic inv_sqrt2() { return {0, 0, 1, 0, 1}; }
    static constexpr GaussianDyadic i_inv_sqrt2() { return {0, 0, 0, 1, 1}; }

    bool is_zero() const { return p == 0 && q == 0 && u == 0 && v == 0; }

    GaussianDyadic normalized() const {
        GaussianDyadic r = *this;
        if (r.is_zero()) return zero();
        while (r.k > 0 && r.p % 2 == 0 && r.q % 2 == 0 && r.u % 2 == 0 && r.v % 2 == 0) {
            r.p /= 2;
            r.q /= 2;
            r.u /= 2;
            r.v /= 2;
            --r.k;
        }
        return r;
    }

    bool operator==(const GaussianDyadic& o) const = default;

    double real() const {
        return (double(p) + double(u) * 1.4142135623730950488) /
               double(std::int64_t(1) << k);
    }
    double imag() const {
        return (double(q) + double(v) * 1.4142135623730950488) /
               double(std::int64_t(1) << k);
    }

    std::string to_string() const {
        std::string s = "(" + std::to_string(p);
        if (u) s += (u > 0 ? "+" : "") + std::to_string(u) + "r2";
        s += (q >= 0 ? "+" : "") + std::to_string(q);
        if (v) s += (v > 0 ? "+" : "") + std::to_string(v) + "r2";
        s += "i)/2^" + std::to_string(k);
        return s;
    }
};

inline GaussianDyadic gd_add(const GaussianDyadic& x, const GaussianDyadic& y) {
    int k = x.k > y.k ? x.k : y.k;
    std::int64_t sx = std::int64_t(1) << (k - x.k);
    std::int64_t sy = std::int64_t(1) << (k - y.k);
    return GaussianDyadic{x.p * sx + y.p * sy, x.q * sx + y.q * sy, x.u * sx + y.u * sy,
                          x.v * sx + y.v * sy, k}
        .normalized();
}

inline GaussianDyadic gd_neg(const GaussianDyadic& x) { return {-x.p, -x.q, -x.u, -x.v, x.k}; }

inline GaussianDyadic gd_mul(const GaussianDyadic& x, const GaussianDyadic& y) {
    // (a + b i)(c + d i) with a = p + u*sqrt2 etc.; sqrt2^2 = 2.
    std::int64_t rp = x.p * y.p + 2 * x.u * y.u - x.q * y.q - 2 * x.v * y.v;
    std::int64_t ru = x.p * y.u + x.u * y.p - x.q * y.v - x.v * y.q;
    std::int64_t ip = x.p * y.q + x.q * y.p + 2 * (x.u * y.v + x.v * y.u);
    std::int64_t iv = x.p * y.v + x.u * y.q + x.q * y.u + x.v * y.p;
    return GaussianDyadic{rp, ip, ru, iv, x.k + y.k}.normalized();
}

inline GaussianDyadic gd_conj(const GaussianDyadic& x) { return {x.p, -x.q, x.u, -x.v, x.k}; }

/// |x|^2, exact (imaginary parts vanish; sqrt2 part may remain).
inline GaussianDyadic gd_norm_sq(const GaussianDyadic& x) {
    std::int64_t rat = x.p * x.p + 2 * x.u * x.u + x.q * x.q + 2 * x.v * x.v;
    std::int64_t rt2 = 2 * (x.p * x.u + x.q * x.v);
    return GaussianDyadic{rat, 0, rt2, 0, 2 * x.k}.normalized();
}

/// Multiply by i^e for e in [0, 4).
inline GaussianDyadic gd_mul_i_pow(const GaussianDyadic& x, int e) {
    switch (e & 3) {
        case 0: return x;
        case 1: return {-x.q, x.p, -x.v, x.u, x.k};
        case 2: return {-x.p, -x.q, -x.u, -x.v, x.k};
        default: return {x.q, -x.p, x.v, -x.u, x.k};
    }
}

/// Multiply by 1/sqrt2: x * sqrt2 / 2.
inline GaussianDyadic gd_div_sqrt2(const GaussianDyadic& x) {
    return GaussianDyadic{2 * x.u, 2 * x.v, x.p, x.q, x.k + 1}.normalized();
}

}  // namespace qio
