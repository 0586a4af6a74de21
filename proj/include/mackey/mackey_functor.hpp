#pragma once

#include <nlohmann/json_fwd.hpp>

#include "mackey/abelian.hpp"
#include "mackey/group.hpp"

namespace mackey {

// A Mackey functor over C_{2^k}: k+1 presented abelian groups with Weyl
// action, restriction and transfer matrices. level[i] is the value at C_{2^i}.
struct MackeyFunctor {
    int k = 0;
    std::vector<FgAbGroup> level;  // size k+1
    std::vector<IntMat> gamma;     // gamma[i] on level i, size k+1
    std::vector<IntMat> res;       // res[i]: level i -> level i-1, size k+1 (res[0] unused)
    std::vector<IntMat> tr;        // tr[i]: level i-1 -> level i, size k+1 (tr[0] unused)
    bool is_green = false;
    int unit = -1;  // generator index at level k when is_green
    std::string name;

    MackeyFunctor() = default;
    explicit MackeyFunctor(int k_) : k(k_), level(k_ + 1), gamma(k_ + 1), res(k_ + 1), tr(k_ + 1) {}

    // Weyl action of gamma^t on level i (t may be negative).
    IntMat gamma_power(int i, long long t) const;

    FgAbMap res_map(int i) const { return FgAbMap(level[i], level[i - 1], res[i]); }
    FgAbMap tr_map(int i) const { return FgAbMap(level[i - 1], level[i], tr[i]); }
    // Composite restriction level `from` -> level `to` (to <= from).
    FgAbMap res_composite(int from, int to) const;
    // Composite transfer level `from` -> level `to` (from <= to).
    FgAbMap tr_composite(int from, int to) const;

    bool is_zero_functor() const {
        for (const auto& g : level)
            if (!g.is_trivial()) return false;
        return true;
    }

    std::string str() const;
};

// Empty iff all axioms hold; otherwise one line per violated axiom.
std::vector<std::string> validate(const MackeyFunctor& m);

// Built-in coefficient systems.
// Z: constant Z, res 1, tr 2 (Green).
// F2: constant Z/2, res 1, tr 0 (Green).
// A: Burnside Mackey functor (Green, unit w^(k)_0).
// Zdual: levelwise Z, res 2, tr 1 (not Green).
MackeyFunctor builtin_mackey(const std::string& name, int k);

// Product of basis elements at a level of a built-in Green functor.
// For A: w_i * w_j = 2^min(i,j) w_max(i,j).
std::vector<Int> green_multiply(const MackeyFunctor& m, int level, const std::vector<Int>& x,
                                const std::vector<Int>& y);

// #H-truncation: forget levels below C_{2^i}; a (k-i)-level functor over G/H.
MackeyFunctor truncate(const MackeyFunctor& m, int subgroup_index);

// Restriction to C_{2^i}: keep levels 0..i; gamma becomes gamma^{2^{k-i}}.
MackeyFunctor restrict_down(const MackeyFunctor& m, int subgroup_index);

// Fixed-point / fixed-quotient / twisted variants built from a Z[G]-module
// (a presented group N with gamma-action g0 of order dividing 2^k).
//
// FP:  level i = N^{C_{2^i}},       res incl,          tr (1+g^{2^{k-i}})
// FQ:  level i = N_{C_{2^i}},       tr proj,           res (1+g^{2^{k-i}})
// TFP/TFQ are FP/FQ of the sign-twisted module (gamma acting as -g0). At the
// top level this gives ker(1+g0) resp. N/(1+g0), with tr resp. res = (1-g0),
// and the Weyl action is -g0 throughout.
MackeyFunctor fixed_point_functor(int k, const FgAbGroup& n, const IntMat& g0);
MackeyFunctor fixed_quotient_functor(int k, const FgAbGroup& n, const IntMat& g0);
MackeyFunctor twisted_fixed_point_functor(int k, const FgAbGroup& n, const IntMat& g0);
MackeyFunctor twisted_fixed_quotient_functor(int k, const FgAbGroup& n, const IntMat& g0);

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b);
MackeyFunctor zero_mackey(int k);

// A formal Burnside-category morphism tr . (ring element) . res between two
// levels, acting through the middle level.
struct SpanMorphism {
    int source_level = 0;
    int target_level = 0;
    int middle_level = 0;  // <= min(source, target)
    GroupRingElement element;

    SpanMorphism(int src, int tgt, int mid, GroupRingElement e)
        : source_level(src), target_level(tgt), middle_level(mid), element(std::move(e)) {
        if (mid > src || mid > tgt) throw std::invalid_argument("span middle above a leg");
    }
    static SpanMorphism identity(int k, int lev) {
        return SpanMorphism(lev, lev, lev, GroupRingElement::unit(k));
    }

    // Rendered in the differential notation, e.g. "(1-g)tr[1<-0]".
    std::string str() const;
};

// tr . (element via Weyl matrices) . res as a map of the presented groups.
FgAbMap eval_span(const MackeyFunctor& m, const SpanMorphism& s);

// Normalize s2 . s1 into a single span with the cyclic double coset formula.
SpanMorphism compose_spans(const GroupContext& g, const SpanMorphism& s2, const SpanMorphism& s1);

// JSON Lewis-diagram schema:
// {"k":int, "levels":[{"gens":int,"relations":[[int]]}], "gamma":[[[int]]],
//  "res":[[[int]]], "tr":[[[int]]], "green":bool, "unit":int|null}
nlohmann::json mackey_to_json(const MackeyFunctor& m);
MackeyFunctor mackey_from_json(const nlohmann::json& j);

}  // namespace mackey
