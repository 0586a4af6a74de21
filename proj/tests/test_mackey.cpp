#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "mackey/mackey_functor.hpp"

using namespace mackey;

TEST_CASE("built-ins validate") {
    for (int k = 0; k <= 5; ++k)
        for (const char* name : {"Z", "F2", "A", "Zdual"}) {
            MackeyFunctor m = builtin_mackey(name, k);
            auto report = validate(m);
            CAPTURE(name);
            CAPTURE(k);
            for (const auto& line : report) MESSAGE(line);
            CHECK(report.empty());
        }
}

TEST_CASE("burnside structure maps") {
    MackeyFunctor a = builtin_mackey("A", 2);
    CHECK(a.level[2].n_generators == 3);
    // res(w^(2)_1) = 2 w^(1)_0
    std::vector<Int> w1{0, 1, 0};
    auto r = a.res[2].apply(w1);
    CHECK(r == std::vector<Int>{2, 0});
    // tr(w^(1)_0) = w^(2)_1
    std::vector<Int> w0{1, 0};
    CHECK(a.tr[2].apply(w0) == std::vector<Int>{0, 1, 0});
}

TEST_CASE("broken transfer is reported") {
    MackeyFunctor m = builtin_mackey("Z", 2);
    m.tr[1] = IntMat::scalar(1, 3);
    auto report = validate(m);
    REQUIRE(!report.empty());
    bool found = false;
    for (const auto& line : report)
        if (line.find("double coset") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("F2 transfer is zero") {
    MackeyFunctor m = builtin_mackey("F2", 1);
    CHECK(m.res[1](0, 0) == 1);
    CHECK(FgAbMap(m.level[0], m.level[1], m.tr[1]).is_zero());
}

TEST_CASE("truncation") {
    MackeyFunctor z = builtin_mackey("Z", 2);
    MackeyFunctor t = truncate(z, 1);
    CHECK(t.k == 1);
    CHECK(validate(t).empty());
    CHECK(t.level[0].str() == "Z");
    // truncate(M, e) = M
    MackeyFunctor t0 = truncate(z, 0);
    CHECK(t0.k == 2);
    // nested truncation = one-step truncation
    MackeyFunctor a = builtin_mackey("A", 3);
    MackeyFunctor t2a = truncate(truncate(a, 1), 1);
    MackeyFunctor t2b = truncate(a, 2);
    CHECK(t2a.k == t2b.k);
    for (int i = 0; i <= t2a.k; ++i) {
        CHECK(t2a.level[i].n_generators == t2b.level[i].n_generators);
        CHECK(t2a.gamma[i] == t2b.gamma[i]);
    }
}

TEST_CASE("restrict_down") {
    MackeyFunctor a = builtin_mackey("A", 2);
    MackeyFunctor r = restrict_down(a, 1);
    CHECK(r.k == 1);
    CHECK(validate(r).empty());
    CHECK(r.level[1].n_generators == 2);  // A(C_2)
    MackeyFunctor z = restrict_down(builtin_mackey("Z", 2), 1);
    CHECK(z.level[0].str() == "Z");
    CHECK(z.res[1](0, 0) == 1);
    CHECK(z.tr[1](0, 0) == 2);
}

TEST_CASE("fixed point and quotient functors") {
    FgAbGroup Z = FgAbGroup::free_group(1);
    IntMat one = IntMat::identity(1);
    // TFP(Z trivial), k=1: top level = 2-torsion of Z = 0
    {
        MackeyFunctor m = twisted_fixed_point_functor(1, Z, one);
        CHECK(validate(m).empty());
        CHECK(m.level[1].is_trivial());
        CHECK(m.level[0].str() == "Z");
    }
    // TFQ(Z trivial), k=1: top level = Z/(1+gamma) = Z/2
    {
        MackeyFunctor m = twisted_fixed_quotient_functor(1, Z, one);
        CHECK(validate(m).empty());
        CHECK(m.level[1].str() == "Z/2");
    }
    // FQ(Z[C_2] regular), k=1: top level = orbit quotient = Z
    {
        FgAbGroup reg = FgAbGroup::free_group(2);
        IntMat swap{{0, 1}, {1, 0}};
        MackeyFunctor m = fixed_quotient_functor(1, reg, swap);
        CHECK(validate(m).empty());
        CHECK(m.level[1].str() == "Z");
        CHECK(m.level[0].str() == "Z^2");
        // FP of the same: fixed points Z
        MackeyFunctor f = fixed_point_functor(1, reg, swap);
        CHECK(validate(f).empty());
        CHECK(f.level[1].str() == "Z");
    }
    // sign action: FP(Z, -1) over C_2: top = 0, TFP(Z, -1): top = Z
    {
        IntMat minus = IntMat::scalar(1, -1);
        MackeyFunctor f = fixed_point_functor(1, Z, minus);
        CHECK(f.level[1].is_trivial());
        MackeyFunctor t = twisted_fixed_point_functor(1, Z, minus);
        CHECK(t.level[1].str() == "Z");
        CHECK(validate(t).empty());
    }
    CHECK_THROWS(fixed_point_functor(1, Z, IntMat::scalar(1, 2)));
}

TEST_CASE("eval_span") {
    // M = Z, k = 2, full transfer: multiplication by 4
    {
        MackeyFunctor z = builtin_mackey("Z", 2);
        SpanMorphism s(0, 2, 0, GroupRingElement::unit(2));
        CHECK(eval_span(z, s).matrix(0, 0) == 4);
    }
    // M = Z, 1 - gamma at level 0: zero
    {
        MackeyFunctor z = builtin_mackey("Z", 2);
        auto e = GroupRingElement::unit(2) - GroupRingElement::gamma_power(2, 1);
        SpanMorphism s(0, 0, 0, e);
        CHECK(eval_span(z, s).is_zero());
    }
    // M = A, k = 1: tr . res on A(C_2): w0 -> w1, w1 -> 2 w1
    {
        MackeyFunctor a = builtin_mackey("A", 1);
        SpanMorphism s(1, 1, 0, GroupRingElement::unit(1));
        IntMat got = eval_span(a, s).matrix;
        CHECK(got == IntMat{{0, 0}, {1, 2}});
    }
}

TEST_CASE("span composition matches matrix composition") {
    GroupContext g(2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> lev(0, 2), coef(-2, 2);
    auto random_span = [&](int src, int tgt) {
        int mid = std::uniform_int_distribution<int>(0, std::min(src, tgt))(rng);
        GroupRingElement e(2);
        for (auto& c : e.coeff) c = coef(rng);
        return SpanMorphism(src, tgt, mid, e);
    };
    for (const char* name : {"Z", "A", "F2"}) {
        MackeyFunctor m = builtin_mackey(name, 2);
        for (int trial = 0; trial < 100; ++trial) {
            int a = lev(rng), b = lev(rng), c = lev(rng);
            SpanMorphism s1 = random_span(a, b);
            SpanMorphism s2 = random_span(b, c);
            SpanMorphism comp = compose_spans(g, s2, s1);
            FgAbMap direct = eval_span(m, s2).compose(eval_span(m, s1));
            CHECK(eval_span(m, comp).equals(direct));
        }
    }
}

TEST_CASE("span rendering") {
    GroupContext g(3);
    CHECK(SpanMorphism(2, 3, 2, GroupRingElement::unit(3)).str() == "tr[3<-2]");
    CHECK(SpanMorphism(3, 2, 1, zeta(g, 2)).str() == "zeta_2tr[2<-1]res[3->1]");
    auto e = GroupRingElement::unit(3) - GroupRingElement::gamma_power(3, 1);
    CHECK(SpanMorphism(0, 0, 0, e).str() == "(1-g)");
    CHECK(SpanMorphism::identity(3, 1).str() == "1");
}

TEST_CASE("json round trip") {
    for (const char* name : {"Z", "A", "Zdual"}) {
        MackeyFunctor m = builtin_mackey(name, 2);
        nlohmann::json j = mackey_to_json(m);
        MackeyFunctor back = mackey_from_json(j);
        CHECK(validate(back).empty());
        CHECK(back.k == m.k);
        for (int i = 0; i <= m.k; ++i) {
            CHECK(back.level[i].n_generators == m.level[i].n_generators);
            CHECK(back.gamma[i] == m.gamma[i]);
        }
        CHECK(back.is_green == m.is_green);
    }
    // F2 carries relations through the round trip
    MackeyFunctor f = mackey_from_json(mackey_to_json(builtin_mackey("F2", 1)));
    CHECK(f.level[0].str() == "Z/2");
}

TEST_CASE("FP/FQ recover fixed points and orbits of the regular module") {
    // FP and FQ applied to M(e) with its Weyl action reproduce the level-k
    // values M(e)^G and M(e)/G when M is itself FP/FQ shaped.
    FgAbGroup reg = FgAbGroup::free_group(4);
    IntMat cyc(4, 4);
    for (int i = 0; i < 4; ++i) cyc((i + 1) % 4, i) = 1;
    MackeyFunctor fp = fixed_point_functor(2, reg, cyc);
    MackeyFunctor fq = fixed_quotient_functor(2, reg, cyc);
    CHECK(validate(fp).empty());
    CHECK(validate(fq).empty());
    MackeyFunctor fp2 = fixed_point_functor(2, fp.level[0], fp.gamma[0]);
    CHECK(fp2.level[2].same_invariants(fp.level[2]));
    MackeyFunctor fq2 = fixed_quotient_functor(2, fq.level[0], fq.gamma[0]);
    CHECK(fq2.level[2].same_invariants(fq.level[2]));
}
