#pragma once

#include <optional>

#include "mackey/intmat.hpp"

namespace mackey {

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithForm {
    IntMat U, D, V;
    int rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& A);

// Nonzero diagonal entries of the Smith form, 1s dropped, in divisibility order.
std::vector<Int> invariant_factors(const IntMat& A);

// Basis (as matrix columns) of { x : A x = 0 } over the integers.
IntMat kernel_basis(const IntMat& A);

// One integer solution x of A x = b, if any.
std::optional<std::vector<Int>> solve(const IntMat& A, const std::vector<Int>& b);

// Columnwise solve: X with A X = B.
std::optional<IntMat> solve_matrix(const IntMat& A, const IntMat& B);

// Is v in the column lattice of L?
bool lattice_contains(const IntMat& L, const std::vector<Int>& v);

// Is every column of B in the column lattice of A?
bool lattice_contains_all(const IntMat& A, const IntMat& B);

// Basis of { x : A x is in the column lattice of L }, i.e. the kernel of the
// composite Z^n -> Z^m -> Z^m / im(L).
IntMat kernel_mod_lattice(const IntMat& A, const IntMat& L);

}  // namespace mackey
