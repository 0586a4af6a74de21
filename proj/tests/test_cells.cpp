#include <doctest.h>

#include "mackey/cells.hpp"

using namespace mackey;

TEST_CASE("cell structures") {
    // alpha + 2 lambda_k: stabilizers (G; G', e, e, e, e)
    {
        Grading v(3, 0, 1, {0, 2});
        CellStructure c = cell_structure(v);
        CHECK(c.stabilizer == std::vector<int>{3, 2, 0, 0, 0, 0});
    }
    // lambda_k: (G; e, e)
    {
        Grading v(2, 0, 0, {1});
        CHECK(cell_structure(v).stabilizer == std::vector<int>{2, 0, 0});
    }
    // 2 alpha over C_2
    {
        Grading v(1, 0, 2, {});
        CHECK(cell_structure(v).stabilizer == std::vector<int>{1, 0, 0});
    }
    CHECK_THROWS(cell_structure(Grading(2, 1, 0, {1})));   // trivial summand
    CHECK_THROWS(cell_structure(Grading(2, 0, -1, {1})));  // not actual
}

TEST_CASE("chain differentials of S^(alpha + 2 lambda_k)") {
    for (int k : {2, 3}) {
        Grading v(k);
        v.y = 1;
        v.lambda(k) = 2;
        BredonComplex c = chain_complex(v);
        REQUIRE(c.d.size() == 5);
        CHECK(c.d[0].str() == "tr[" + std::to_string(k) + "<-" + std::to_string(k - 1) + "]");
        CHECK(c.d[1].str() == "(1-g)tr[" + std::to_string(k - 1) + "<-0]");
        CHECK(c.d[2].str() == "(1+g)");
        CHECK(c.d[3].str() == "zetabar_" + std::to_string(k));
        CHECK(c.d[4].str() == "(1+g)");
    }
}

TEST_CASE("cochain differentials of S^(2 alpha + 2 lambda_2 + 2 lambda_3)") {
    Grading v(3, 0, 2, {2, 2});
    BredonComplex c = cochain_complex(v);
    REQUIRE(c.d.size() == 10);
    const char* expected[] = {"res[3->2]", "(1-g)",  "(1+g)res[2->1]", "(1-g)", "zeta_2",
                              "(1-g)",     "zeta_2res[1->0]", "(1-g)", "zeta_3", "(1-g)"};
    for (int i = 0; i < 10; ++i) CHECK(c.d[i].str() == expected[i]);
}

TEST_CASE("chain complex of S^(n alpha) over C_2 alternates") {
    Grading v(1, 0, 4, {});
    BredonComplex c = chain_complex(v);
    REQUIRE(c.d.size() == 4);
    CHECK(c.d[0].str() == "tr[1<-0]");
    CHECK(c.d[1].str() == "(1-g)");
    CHECK(c.d[2].str() == "(1+g)");
    CHECK(c.d[3].str() == "(1-g)");
}

TEST_CASE("dump format") {
    Grading v(2, 0, 0, {1});
    std::string d = chain_complex(v).dump();
    CHECK(d.find("dim 0: C_2^2") != std::string::npos);
    CHECK(d.find("tr[2<-0]") != std::string::npos);
}
