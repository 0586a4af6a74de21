#pragma once

#include "mackey/grading.hpp"
#include "mackey/mackey_functor.hpp"

namespace mackey {

// Equivariant cell structure of S^V for an actual V with no trivial summands:
// one cell per dimension 0..|V|, stabilizers weakly descending, cell 0 fixed.
struct CellStructure {
    Grading v;
    std::vector<int> stabilizer;  // subgroup index per dimension, size |V|+1
};

CellStructure cell_structure(const Grading& v);

enum class Direction { chain, cochain };

// The cellular (co)chain complex of S^V with coefficients understood later.
// For chains, d[s] maps cell s to cell s-1 (s = 1..|V|); for cochains, d[s]
// maps cell s to cell s+1 (s = 0..|V|-1).
struct BredonComplex {
    int k = 0;
    Direction direction = Direction::chain;
    CellStructure cells;
    std::vector<SpanMorphism> d;

    int top_dim() const { return int(cells.stabilizer.size()) - 1; }
    std::string dump() const;
};

BredonComplex chain_complex(const Grading& v);
BredonComplex cochain_complex(const Grading& v);

}  // namespace mackey
