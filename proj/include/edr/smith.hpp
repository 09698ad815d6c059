#pragma once

/**
 * @file smith.hpp
 * @brief Smith Normal Form with invertible transformation witnesses.
 *
 * The stored S follows the matrix convention of the underlying theory,
 * d_{i+1} | d_i along the diagonal ("paper order"). The reversed list
 * g_1 | g_2 | ... ("chain order") matches the module-chain convention and is
 * what the invariant-factor consumers want; both are exposed, together with
 * chain-order views of the witnesses, to keep the two conventions from
 * getting crossed.
 */

#include <optional>

#include "edr/matrix.hpp"

namespace edr {

struct SmithDecomposition {
    Matrix B, S, C;         // B * A * C = S, S diagonal in paper order
    Matrix B_inv, C_inv;    // exact inverses, maintained during reduction
    std::vector<Element> diag_paper_order;  // d_{i+1} | d_i, canonical associates
    std::vector<Element> diag_chain_order;  // g_1 | g_2 | ..., the reversed list

    int diag_len() const { return int(diag_paper_order.size()); }

    // chain-order views (diagonal reversed by a symmetric permutation)
    Matrix chain_B() const;
    Matrix chain_B_inv() const;
    Matrix chain_C() const;
    Matrix chain_C_inv() const;
    Matrix chain_S() const;
};

/// Smith Normal Form over any backend; products are decomposed componentwise
/// and recombined positionally.
SmithDecomposition smith_normal_form(const Matrix& a);

/// Ideal generated by the size x size minors of a, over the ring of a.
PrincipalIdeal minors_ideal(const Matrix& a, int size);

/// Independent invariant-factor oracle via minor gcds; Euclidean non-Product
/// backends only, guarded to min(rows, cols) <= 8. Residue matrices are
/// lifted to the integers with explicit modulus relations appended.
std::vector<PrincipalIdeal> minor_gcd_invariants(const Matrix& a);

/// One exact solution x of A x = t, or nullopt when none exists.
std::optional<std::vector<Element>> solve_linear(const Matrix& a, const std::vector<Element>& t);

/// One solution of A x = t read modulo (moduli[i]) in row i.
std::optional<std::vector<Element>> solve_linear_mod(const Matrix& a,
                                                     const std::vector<Element>& t,
                                                     const std::vector<Element>& moduli);

}  // namespace edr
