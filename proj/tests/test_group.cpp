#include <doctest.h>

#include "mackey/group.hpp"

using namespace mackey;

TEST_CASE("zeta elements") {
    GroupContext g2(2);
    CHECK(zeta(g2, 1).str() == "1+g");
    CHECK(zeta_bar(g2, 2).str() == "1-g+g^2-g^3");
    GroupContext g3(3);
    CHECK(zeta(g3, 0) == GroupRingElement::unit(3));
    CHECK_THROWS(zeta(g2, 3));
}

TEST_CASE("ring multiplication") {
    GroupContext g2(2);
    auto one_minus = GroupRingElement::unit(2) - GroupRingElement::gamma_power(2, 1);
    auto one_plus = GroupRingElement::unit(2) + GroupRingElement::gamma_power(2, 1);
    // zeta_j (1-g) = 1 - g^(2^j); zetabar_j (1+g) = 1 - g^(2^j) for j >= 1
    // (the alternating sum telescopes only over an even number of terms)
    for (int j = 0; j <= 2; ++j) {
        auto expect = GroupRingElement::unit(2) - GroupRingElement::gamma_power(2, 1LL << j);
        CHECK(ring_multiply(zeta(g2, j), one_minus) == expect);
        if (j >= 1) CHECK(ring_multiply(zeta_bar(g2, j), one_plus) == expect);
    }
    // in Z[C_2], (1-g)(1+g) = 0
    GroupContext g1(1);
    auto a = GroupRingElement::unit(1) - GroupRingElement::gamma_power(1, 1);
    auto b = GroupRingElement::unit(1) + GroupRingElement::gamma_power(1, 1);
    CHECK(ring_multiply(a, b).is_zero());
    // commutativity
    CHECK(ring_multiply(zeta(g2, 1), zeta_bar(g2, 2)) == ring_multiply(zeta_bar(g2, 2), zeta(g2, 1)));
}

TEST_CASE("gamma powers reduce mod group order") {
    CHECK(GroupRingElement::gamma_power(2, 4) == GroupRingElement::unit(2));
    CHECK(GroupRingElement::gamma_power(2, -1) == GroupRingElement::gamma_power(2, 3));
}

TEST_CASE("orbit products") {
    GroupContext g2(2);
    {
        auto p = orbit_product(g2, 2, 1);  // G/G x X = X
        CHECK(p.copies == 1);
        CHECK(p.stabilizer == 1);
    }
    {
        auto p = orbit_product(g2, 1, 1);  // 4 points, orbits of size 2
        CHECK(p.copies == 2);
        CHECK(p.stabilizer == 1);
    }
    GroupContext g3(3);
    {
        auto p = orbit_product(g3, 1, 2);  // copies = [C_8 : C_4] = 2
        CHECK(p.copies == 2);
        CHECK(p.stabilizer == 1);
    }
    // symmetry and counting |G/H x G/K| = copies * |G/stab|
    for (int h = 0; h <= 3; ++h)
        for (int kk = 0; kk <= 3; ++kk) {
            auto p = orbit_product(g3, h, kk);
            auto q = orbit_product(g3, kk, h);
            CHECK(p.copies == q.copies);
            CHECK(p.stabilizer == q.stabilizer);
            long long lhs = (8 / (1 << h)) * (8 / (1 << kk));
            CHECK(lhs == p.copies * (8 / (1 << p.stabilizer)));
        }
}
