#include "mackey/snf.hpp"

namespace mackey {

namespace {

// Position of the entry with smallest nonzero absolute value in A(s:, s:).
// Smallest-pivot selection keeps coefficient growth tame at desk scale.
bool find_pivot(const IntMat& A, int s, int& pr, int& pc) {
    bool found = false;
    Int best = 0;
    for (int i = s; i < A.rows(); ++i)
        for (int j = s; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            Int v = abs(A(i, j));
            if (!found || v < best) {
                best = v;
                pr = i;
                pc = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& A) {
    SmithForm f;
    f.D = A;
    f.U = IntMat::identity(A.rows());
    f.V = IntMat::identity(A.cols());
    IntMat& D = f.D;
    IntMat& U = f.U;
    IntMat& V = f.V;

    const int n = std::min(A.rows(), A.cols());
    int s = 0;
    while (s < n) {
        int pr, pc;
        if (!find_pivot(D, s, pr, pc)) break;
        if (pr != s) {
            D.swap_rows(s, pr);
            U.swap_rows(s, pr);
        }
        if (pc != s) {
            D.swap_cols(s, pc);
            V.swap_cols(s, pc);
        }

        bool clean = true;
        for (int i = s + 1; i < D.rows(); ++i) {
            if (D(i, s) == 0) continue;
            Int q = D(i, s) / D(s, s);
            if (q != 0) {
                D.add_row(i, s, -q);
                U.add_row(i, s, -q);
            }
            if (D(i, s) != 0) clean = false;
        }
        for (int j = s + 1; j < D.cols(); ++j) {
            if (D(s, j) == 0) continue;
            Int q = D(s, j) / D(s, s);
            if (q != 0) {
                D.add_col(j, s, -q);
                V.add_col(j, s, -q);
            }
            if (D(s, j) != 0) clean = false;
        }
        if (!clean) continue;  // residues remain, repick a smaller pivot

        // Enforce the divisibility chain: fold any bad entry into column s.
        bool divides_all = true;
        for (int i = s + 1; i < D.rows() && divides_all; ++i)
            for (int j = s + 1; j < D.cols(); ++j)
                if (D(i, j) % D(s, s) != 0) {
                    D.add_col(s, j, 1);
                    V.add_col(s, j, 1);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (D(s, s) < 0) {
            D.negate_row(s);
            U.negate_row(s);
        }
        ++s;
    }
    f.rank = s;
    return f;
}

std::vector<Int> invariant_factors(const IntMat& A) {
    SmithForm f = smith_normal_form(A);
    std::vector<Int> out;
    for (int i = 0; i < f.rank; ++i)
        if (f.D(i, i) != 1) out.push_back(f.D(i, i));
    return out;
}

IntMat kernel_basis(const IntMat& A) {
    SmithForm f = smith_normal_form(A);
    const int n = A.cols();
    IntMat out(n, n - f.rank);
    for (int j = f.rank; j < n; ++j)
        for (int i = 0; i < n; ++i) out(i, j - f.rank) = f.V(i, j);
    return out;
}

std::optional<std::vector<Int>> solve(const IntMat& A, const std::vector<Int>& b) {
    SmithForm f = smith_normal_form(A);
    std::vector<Int> c = f.U.apply(b);
    std::vector<Int> y(A.cols(), Int(0));
    for (int i = 0; i < int(c.size()); ++i) {
        if (i < f.rank) {
            if (c[i] % f.D(i, i) != 0) return std::nullopt;
            y[i] = c[i] / f.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return f.V.apply(y);
}

std::optional<IntMat> solve_matrix(const IntMat& A, const IntMat& B) {
    assert(A.rows() == B.rows());
    SmithForm f = smith_normal_form(A);
    IntMat X(A.cols(), B.cols());
    for (int col = 0; col < B.cols(); ++col) {
        std::vector<Int> c = f.U.apply(B.column(col));
        std::vector<Int> y(A.cols(), Int(0));
        for (int i = 0; i < int(c.size()); ++i) {
            if (i < f.rank) {
                if (c[i] % f.D(i, i) != 0) return std::nullopt;
                y[i] = c[i] / f.D(i, i);
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        X.set_column(col, f.V.apply(y));
    }
    return X;
}

bool lattice_contains(const IntMat& L, const std::vector<Int>& v) {
    return solve(L, v).has_value();
}

bool lattice_contains_all(const IntMat& A, const IntMat& B) {
    return solve_matrix(A, B).has_value();
}

IntMat kernel_mod_lattice(const IntMat& A, const IntMat& L) {
    assert(A.rows() == L.rows());
    // Solve A x = L y: kernel of [A | -L], projected to the x block.
    IntMat K = kernel_basis(IntMat::hcat(A, -L));
    IntMat X = K.submatrix(0, 0, A.cols(), K.cols());
    // The x-parts may be redundant; column-reduce them to a lattice basis via
    // the Smith form of X^T (its row space = lattice spanned by columns of X).
    SmithForm f = smith_normal_form(X.transpose());
    // rows of f.D = f.U * X^T give a triangular-ish generating set; a cleaner
    // basis: the first `rank` columns of (f.V^T)^{-1}... simpler: use columns
    // X * (columns of kernel-complement). Keep it simple: return X with
    // duplicate columns removed by Smith reduction of X itself.
    SmithForm g = smith_normal_form(X);
    // X * V has its last (cols - rank) columns zero; the first `rank` columns
    // of X*V form a basis of the column lattice.
    IntMat XV = X * g.V;
    IntMat out(A.cols(), g.rank);
    for (int j = 0; j < g.rank; ++j)
        for (int i = 0; i < A.cols(); ++i) out(i, j) = XV(i, j);
    return out;
}

}  // namespace mackey
