#include <doctest.h>

#include <random>

#include "mackey/snf.hpp"

using namespace mackey;

namespace {

IntMat random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

Int det(const IntMat& a) {
    // Bareiss elimination, exact.
    assert(a.rows() == a.cols());
    int n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    Int prev = 1;
    int sign = 1;
    for (int s = 0; s < n - 1; ++s) {
        if (m(s, s) == 0) {
            int piv = -1;
            for (int i = s + 1; i < n; ++i)
                if (m(i, s) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            m.swap_rows(s, piv);
            sign = -sign;
        }
        for (int i = s + 1; i < n; ++i)
            for (int j = s + 1; j < n; ++j) m(i, j) = (m(i, j) * m(s, s) - m(i, s) * m(s, j)) / prev;
        prev = m(s, s);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
    {
        SmithForm f = smith_normal_form(IntMat{{2, 0}, {0, 3}});
        CHECK(f.D(0, 0) == 1);
        CHECK(f.D(1, 1) == 6);
    }
    {
        SmithForm f = smith_normal_form(IntMat{{0}});
        CHECK(f.rank == 0);
        CHECK(f.D(0, 0) == 0);
    }
    {
        // det = 4, gcd of entries 2: invariant factors (2, 2)
        SmithForm f = smith_normal_form(IntMat{{4, 2}, {2, 2}});
        CHECK(f.D(0, 0) == 2);
        CHECK(f.D(1, 1) == 2);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        IntMat a = random_matrix(rng, dim(rng), dim(rng), 9);
        SmithForm f = smith_normal_form(a);
        REQUIRE(f.U * a * f.V == f.D);
        CHECK(abs(det(f.U)) == 1);
        CHECK(abs(det(f.V)) == 1);
        for (int i = 0; i + 1 < std::min(f.D.rows(), f.D.cols()); ++i) {
            if (f.D(i + 1, i + 1) != 0) {
                REQUIRE(f.D(i, i) != 0);
                CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
            }
        }
        for (int i = 0; i < f.D.rows(); ++i)
            for (int j = 0; j < f.D.cols(); ++j)
                if (i != j) CHECK(f.D(i, j) == 0);
    }
}

TEST_CASE("kernel and solve") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> dim(1, 6);
        IntMat a = random_matrix(rng, dim(rng), dim(rng), 5);
        IntMat k = kernel_basis(a);
        CHECK((a * k).is_zero());
        // a * (random x) must be solvable and give back a preimage
        IntMat x = random_matrix(rng, a.cols(), 1, 4);
        auto sol = solve(a, a.apply(x.column(0)));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == a.apply(x.column(0)));
    }
}

TEST_CASE("kernel_mod_lattice") {
    // x with [[2]] x in lattice of [[6]]: multiples of 3
    IntMat a{{2}};
    IntMat l{{6}};
    IntMat k = kernel_mod_lattice(a, l);
    REQUIRE(k.cols() == 1);
    CHECK(abs(k(0, 0)) == 3);
}
