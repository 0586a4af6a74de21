#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mackey/snf.hpp"

namespace mackey {

// Finitely generated abelian group presented as Z^n / im(relations).
// Columns of `relations` are relators in Z^n.
struct FgAbGroup {
    int n_generators = 0;
    IntMat relations;  // n_generators x (#relators)

    FgAbGroup() : relations(0, 0) {}
    FgAbGroup(int n, IntMat rels) : n_generators(n), relations(std::move(rels)) {
        assert(relations.rows() == n_generators);
    }

    static FgAbGroup free_group(int n) { return FgAbGroup(n, IntMat(n, 0)); }
    static FgAbGroup zero() { return FgAbGroup(0, IntMat(0, 0)); }
    static FgAbGroup cyclic(const Int& order) {
        IntMat r(1, 1);
        r(0, 0) = order;
        return FgAbGroup(1, r);
    }

    std::vector<Int> invariants() const { return invariant_factor_list(); }

    // Invariant factors d1 | d2 | ... with trailing zeros for free rank.
    std::vector<Int> invariant_factor_list() const {
        SmithForm f = smith_normal_form(relations);
        std::vector<Int> out;
        for (int i = 0; i < f.rank; ++i)
            if (f.D(i, i) != 1) out.push_back(f.D(i, i));
        for (int i = f.rank; i < n_generators; ++i) out.push_back(0);
        return out;
    }

    int free_rank() const {
        SmithForm f = smith_normal_form(relations);
        return n_generators - f.rank;
    }

    bool is_trivial() const {
        return invariant_factor_list().empty();
    }

    // |G| for finite groups, nullopt otherwise.
    std::optional<Int> order() const {
        Int o = 1;
        for (const Int& d : invariant_factor_list()) {
            if (d == 0) return std::nullopt;
            o *= d;
        }
        return o;
    }

    bool same_invariants(const FgAbGroup& o) const {
        return invariant_factor_list() == o.invariant_factor_list();
    }

    // Is v a relation (i.e. zero in the group)?
    bool element_is_zero(const std::vector<Int>& v) const {
        return lattice_contains(relations, v);
    }

    std::string str() const;
};

// "Z^2 + Z/4" style rendering of invariant factors.
std::string group_name(const std::vector<Int>& invariants);

struct FgAbMap {
    FgAbGroup src, tgt;
    IntMat matrix;  // tgt.n_generators x src.n_generators, columns act on generators

    FgAbMap() : matrix(0, 0) {}
    FgAbMap(FgAbGroup s, FgAbGroup t, IntMat m)
        : src(std::move(s)), tgt(std::move(t)), matrix(std::move(m)) {
        assert(matrix.rows() == tgt.n_generators && matrix.cols() == src.n_generators);
    }

    static FgAbMap identity(const FgAbGroup& g) {
        return FgAbMap(g, g, IntMat::identity(g.n_generators));
    }
    static FgAbMap zero_map(const FgAbGroup& s, const FgAbGroup& t) {
        return FgAbMap(s, t, IntMat(t.n_generators, s.n_generators));
    }

    // Maps source relations into target relations.
    bool is_well_defined() const {
        return lattice_contains_all(tgt.relations, matrix * src.relations);
    }
    bool is_zero() const {
        return lattice_contains_all(tgt.relations, matrix);
    }
    bool is_surjective() const {
        // coker = Z^m / (im(matrix) + im(relations)) trivial
        FgAbGroup coker(tgt.n_generators, IntMat::hcat(matrix, tgt.relations));
        return coker.is_trivial();
    }
    bool is_injective() const {
        // kernel: x with matrix*x in im(tgt.relations), modulo src.relations
        IntMat K = kernel_mod_lattice(matrix, tgt.relations);
        return lattice_contains_all(src.relations, K);
    }
    bool is_isomorphism() const {
        return is_well_defined() && is_surjective() && is_injective();
    }

    FgAbMap compose(const FgAbMap& inner) const {  // (*this) after inner
        assert(inner.matrix.rows() == matrix.cols());
        return FgAbMap(inner.src, tgt, matrix * inner.matrix);
    }

    // Equal as maps of the presented groups.
    bool equals(const FgAbMap& o) const {
        if (matrix.rows() != o.matrix.rows() || matrix.cols() != o.matrix.cols()) return false;
        return lattice_contains_all(tgt.relations, matrix - o.matrix);
    }
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

// Does A embed into B as an abstract abelian group?
bool embeds(const FgAbGroup& a, const FgAbGroup& b);

// Homology of  A --d_in--> B --d_out--> C  at B, as ker(d_out)/im(d_in),
// with enough bookkeeping to push maps through.
struct HomologyData {
    FgAbGroup H;
    IntMat cycle_basis;  // B.n_generators x H.n_generators; columns are cycles

    // Express a cycle (element of Z^{nB} with d_out ~ 0) in homology coordinates.
    // Fails if v is not a cycle.
    std::optional<std::vector<Int>> project(const FgAbGroup& ambient_B,
                                            const std::vector<Int>& v) const;
    std::vector<Int> lift(int generator) const { return cycle_basis.column(generator); }
};

class ChainError : public std::runtime_error {
public:
    explicit ChainError(const std::string& what) : std::runtime_error(what) {}
};

// Throws ChainError if d_out . d_in != 0 as maps of presented groups.
HomologyData homology(const FgAbMap& d_in, const FgAbMap& d_out);

// Map on homology induced by f : B -> B' commuting with the differentials at
// the two relevant spots. Throws ChainError if f fails to descend.
FgAbMap induced_map(const FgAbMap& f, const HomologyData& h_src, const HomologyData& h_tgt);

}  // namespace mackey
