#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "qio/circuit.hpp"
#include "qio/gaussian.hpp"
#include "qio/update.hpp"

namespace qio {

struct TermLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operator in Pauli normal form: sum over labels s of beta_s * Pauli(s),
/// where Pauli(s) = (x)_i X^{b_i} Z^{a_i}. Keys are packed labels (see
/// PauliLabel::key), so map order is lexicographic on the bit string. Zero
/// coefficients are never stored.
struct PauliSum {
    int n = 0;
    std::map<std::uint32_t, GaussianDyadic> terms;

    bool operator==(const PauliSum& o) const = default;
};

inline constexpr std::size_t kDefaultTermLimit = std::size_t(1) << 20;  // 4^10

/// Phase-exact conjugation of Pauli(s) through c: the returned sum U
/// satisfies U * U_c = U_c * Pauli(s) exactly, i.e. U = U_c Pauli(s) U_c^+.
/// Clifford gates relabel a term and multiply its coefficient by the exact
/// element of {+-1, +-i}; a T gate splits terms with b=1 on its wire into an
/// i/sqrt2 / 1/sqrt2 pair. Throws TermLimitError when the running term count
/// would exceed `term_limit`.
PauliSum propagate(const Circuit& c, const PauliLabel& s,
                   std::size_t term_limit = kDefaultTermLimit);

/// Sum of |beta|^2 over all terms, exact.
GaussianDyadic parseval(const PauliSum& ps);

/// Adjoint in the same normal form: conjugate each coefficient and fold the
/// (X^b Z^a)^+ = (-1)^{ab} X^b Z^a signs in.
PauliSum ps_adjoint(const PauliSum& ps);

/// One `<label> <p> <q> <u> <v> <k>` line per term, sorted by label.
std::string dump_pauli_sum(const PauliSum& ps);

}  // namespace qio
