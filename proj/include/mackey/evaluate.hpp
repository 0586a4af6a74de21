#pragma once

#include "mackey/cells.hpp"

namespace mackey {

// One term of a levelwise-evaluated complex: M(G/H x G/L) decomposed into
// orbit copies of M(min(H, L)). Copy t is the orbit of (H, gamma^t L).
struct LevelTerm {
    int level = 0;      // H
    int cell_stab = 0;  // L
    int copies = 1;
    int module_level = 0;  // min(H, L)
    FgAbGroup group;       // direct sum of the copies
};

LevelTerm make_term(const MackeyFunctor& m, int level, int cell_stab);

// Maps of M-values induced by the three generating maps of second coordinates,
// expanded through the canonical orbit decomposition. `twist` is +1, or -1
// when the ambient grading is non-orientable (the sign representation twists
// every gamma-translation in the identifications).
IntMat expand_ring_element(const MackeyFunctor& m, int level, int cell_stab,
                           const GroupRingElement& elt, int twist);
// covariant along G/L_from -> G/L_to, L_from <= L_to
IntMat expand_second_transfer(const MackeyFunctor& m, int level, int from_stab, int to_stab,
                              int twist);
// contravariant along G/L_to -> G/L_from, L_to <= L_from
IntMat expand_second_restriction(const MackeyFunctor& m, int level, int from_stab, int to_stab,
                                 int twist);

// First-coordinate structure maps between terms with the same cell stabilizer.
IntMat expand_level_restriction(const MackeyFunctor& m, int from_level, int cell_stab, int twist);
IntMat expand_level_transfer(const MackeyFunctor& m, int to_level, int cell_stab, int twist);
IntMat expand_level_gamma(const MackeyFunctor& m, int level, int cell_stab, int twist);

// Full differential of a span between two terms at a fixed level.
FgAbMap expand_span(const MackeyFunctor& m, int level, const SpanMorphism& s, int twist);

// The complex of Theorem-style cells evaluated at one subgroup level.
struct LevelComplex {
    int level = 0;
    Direction direction = Direction::chain;
    std::vector<LevelTerm> terms;  // per cell dimension
    std::vector<FgAbMap> diff;     // chains: diff[s]: term s+1 -> term s
                                   // cochains: diff[s]: term s -> term s+1

    int top_dim() const { return int(terms.size()) - 1; }
    // d_in / d_out at a degree, zero maps at the ends.
    FgAbMap incoming(int n) const;
    FgAbMap outgoing(int n) const;
};

LevelComplex evaluate_at_level(const BredonComplex& c, const MackeyFunctor& m, int level,
                               int twist = 1);

// Every adjacent composite of the evaluated complex, at every level, is zero.
bool complex_is_valid(const BredonComplex& c, const MackeyFunctor& m);

// A levelwise collection of maps between two Mackey functors.
struct MackeyMorphism {
    MackeyFunctor src, tgt;
    std::vector<FgAbMap> at;  // size k+1

    // Commutes with res, tr and gamma (each square, as maps of presented groups).
    bool commutes() const;
    bool is_isomorphism() const;
    bool is_zero() const;
};

// Homology Mackey functor of S^V in one degree, with handles kept for
// induced-map construction.
struct MackeyHomology {
    MackeyFunctor functor;
    int degree = 0;
    Direction direction = Direction::chain;
    std::vector<LevelComplex> complexes;  // per level
    std::vector<HomologyData> data;       // per level
};

MackeyHomology homology_mackey(const Grading& v, const MackeyFunctor& m, int n, Direction dir);
MackeyHomology homology_mackey(const BredonComplex& c, const MackeyFunctor& m, int n,
                               int twist = 1);

// H_n(S^V) -> H_n(S^{V+W}) induced by the skeleton inclusion (chains), or
// H^n(S^{V+W}) -> H^n(S^V) induced by the skeleton projection (cochains).
// Realizes multiplication by a_W. The cells of S^V must form the bottom
// skeleton of S^{V+W}.
MackeyMorphism skeleton_mult_map(const Grading& v, const Grading& w, const MackeyFunctor& m,
                                 int n, Direction dir);

// pi_U(S(lambda_s)_+ smash HM) as a Mackey functor; depends only on |U| and
// the orientability of U. Zero unless |U| is 0 or 1.
MackeyHomology unit_sphere_homology(int s, const MackeyFunctor& m, int total_degree,
                                    bool orientable);
BredonComplex unit_sphere_complex(int k, int s);

// Long exact sequence rows of the skeleton pair at one level.
//   chains:   0 -> C(S^W) -> C(S^{W+lambda}) -> Q -> 0       (cut = |W|)
//   cochains: 0 -> T -> C(S^{W+lambda}) -> C(S^W) -> 0
// `first` is the subobject in both cases.
struct LesRow {
    int level = 0;
    Direction direction = Direction::chain;
    int cut = 0;
    std::vector<HomologyData> first, middle, last;  // indexed by degree
    std::vector<FgAbMap> incl, proj;                // per degree
    FgAbMap connecting;  // chains: H_{cut+1}(Q) -> H_cut(sub); cochains: H^cut(small) -> H^{cut+1}(T)

    // Verify im = ker at every interior spot of the long exact sequence.
    std::vector<std::string> exactness_failures() const;
};

LesRow build_les_row(const BredonComplex& big, const MackeyFunctor& m, int level, int cut);

// im(f) = ker(g) inside g's source, as subgroups of the presented group.
bool image_equals_kernel(const FgAbMap& f, const FgAbMap& g);

}  // namespace mackey
