#pragma once

#include <complex>
#include <vector>

#include "qio/circuit.hpp"
#include "qio/pauli_sum.hpp"
#include "qio/update.hpp"

namespace qio {

inline constexpr int kOracleQubitCap = 10;

/// Dense complex matrix, row-major, dim = 2^n. The brute-force ground truth
/// for the tableau, update-function and Pauli-sum modules; deliberately
/// built from the 2x2 / 4x4 gate matrices with no shared code paths.
struct DenseUnitary {
    std::size_t dim = 0;
    std::vector<std::complex<double>> entries;

    std::complex<double>& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const {
        return entries[r * dim + c];
    }
};

DenseUnitary identity_unitary(int n);
DenseUnitary circuit_unitary(const Circuit& c);
DenseUnitary pauli_unitary(const PauliLabel& label);
DenseUnitary pauli_sum_unitary(const PauliSum& ps);
DenseUnitary matmul(const DenseUnitary& a, const DenseUnitary& b);

/// True iff u = lambda v entrywise within tol for some unit phase lambda,
/// pivoting on the largest-magnitude entry of u.
bool equal_up_to_phase(const DenseUnitary& u, const DenseUnitary& v, double tol);

/// True iff dense(ps) * U_c == U_c * Pauli(s) entrywise within tol, with no
/// phase slack.
bool check_conjugation(const Circuit& c, const PauliLabel& s, const PauliSum& ps, double tol);

/// Exact map equality of propagate(c1, s) and propagate(c2, s) over all 4^n
/// labels.
bool update_functions_equal(const Circuit& c1, const Circuit& c2);

}  // namespace qio
