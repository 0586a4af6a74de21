#include <doctest.h>

#include <random>

#include "mackey/abelian.hpp"

using namespace mackey;

TEST_CASE("invariant factors and names") {
    FgAbGroup z = FgAbGroup::free_group(1);
    CHECK(z.str() == "Z");
    CHECK(FgAbGroup::cyclic(4).str() == "Z/4");
    CHECK(FgAbGroup::zero().str() == "0");
    FgAbGroup g(2, IntMat{{2, 0}, {0, 4}});
    CHECK(g.str() == "Z/2 + Z/4");
    // presentation with redundant relator
    FgAbGroup h(1, IntMat{{2, 4}});
    CHECK(h.str() == "Z/2");
}

TEST_CASE("homology of elementary complexes") {
    FgAbGroup Z = FgAbGroup::free_group(1);
    FgAbGroup zero = FgAbGroup::zero();
    // Z --2--> Z --0--> 0: Z/2
    {
        auto h = homology(FgAbMap(Z, Z, IntMat{{2}}), FgAbMap::zero_map(Z, zero));
        CHECK(h.H.str() == "Z/2");
    }
    // 0 --> Z --0--> Z: Z
    {
        auto h = homology(FgAbMap::zero_map(zero, Z), FgAbMap(Z, Z, IntMat{{0}}));
        CHECK(h.H.str() == "Z");
    }
    // Z --4--> Z --0--> Z: Z/4 (cokernel of tr for constant Z over C_4)
    {
        auto h = homology(FgAbMap(Z, Z, IntMat{{4}}), FgAbMap(Z, Z, IntMat{{0}}));
        CHECK(h.H.str() == "Z/4");
    }
    // nonzero composite must throw
    CHECK_THROWS_AS(homology(FgAbMap(Z, Z, IntMat{{2}}), FgAbMap(Z, Z, IntMat{{3}})), ChainError);
}

TEST_CASE("induced maps") {
    FgAbGroup Z = FgAbGroup::free_group(1);
    FgAbGroup zero = FgAbGroup::zero();
    auto h2 = homology(FgAbMap(Z, Z, IntMat{{2}}), FgAbMap::zero_map(Z, zero));  // Z/2
    // identity induces identity
    auto idmap = induced_map(FgAbMap::identity(Z), h2, h2);
    CHECK(idmap.equals(FgAbMap::identity(h2.H)));
    // multiplication by 2 induces zero on Z/2
    auto twomap = induced_map(FgAbMap(Z, Z, IntMat{{2}}), h2, h2);
    CHECK(twomap.is_zero());
}

TEST_CASE("homology against a dense row-reduction oracle") {
    // Oracle: for Z^b with d_in: Z^a -> Z^b, d_out: Z^b -> Z^c free groups,
    // H = ker/im has rank b - rank(d_out) - rank(d_in restricted) and torsion
    // from the Smith form of d_in expressed in a kernel basis. Computed
    // independently here via plain Smith forms on stacked matrices.
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
    int done = 0;
    while (done < 200) {
        int a = dim(rng), b = dim(rng), c = dim(rng);
        IntMat din(b, a), dout(c, b);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) din(i, j) = entry(rng);
        // force d_out . d_in = 0 by building d_out from the left kernel of d_in
        IntMat lk = kernel_basis(din.transpose()).transpose();  // rows span left kernel
        if (lk.rows() == 0) continue;
        IntMat mix(c, lk.rows());
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < lk.rows(); ++j) mix(i, j) = entry(rng);
        dout = mix * lk;
        FgAbGroup A = FgAbGroup::free_group(a), B = FgAbGroup::free_group(b),
                  C = FgAbGroup::free_group(c);
        auto h = homology(FgAbMap(A, B, din), FgAbMap(B, C, dout));

        // oracle: kernel basis K of dout; solve K W = din; invariants of W
        IntMat K = kernel_basis(dout);
        auto W = solve_matrix(K, din);
        REQUIRE(W.has_value());
        FgAbGroup oracle(K.cols(), *W);
        CHECK(h.H.invariant_factor_list() == oracle.invariant_factor_list());
        ++done;
    }
}

TEST_CASE("embeds") {
    CHECK(embeds(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4)));
    CHECK(!embeds(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2)));
    CHECK(!embeds(FgAbGroup::cyclic(2), FgAbGroup::free_group(5)));
    CHECK(embeds(FgAbGroup::free_group(1), FgAbGroup::free_group(2)));
    FgAbGroup two_twos(2, IntMat{{2, 0}, {0, 2}});
    CHECK(!embeds(two_twos, FgAbGroup::cyclic(8)));
    CHECK(embeds(two_twos, direct_sum(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4))));
}
