#include "mackey/cells.hpp"

namespace mackey {

CellStructure cell_structure(const Grading& v) {
    if (!v.is_actual() || v.x != 0 || v.rep_part_is_zero())
        throw std::invalid_argument(
            "cell structure needs an actual grading with x = 0 and a nonzero rep part");
    CellStructure c;
    c.v = v;
    c.stabilizer.push_back(v.k);  // the fixed 0-cell
    for (int i = 0; i < v.y; ++i) c.stabilizer.push_back(v.k - 1);
    for (int j = 2; j <= v.k; ++j)
        for (int i = 0; i < 2 * v.lambda(j); ++i) c.stabilizer.push_back(v.k - j);
    return c;
}

namespace {

// Differential element at position p inside a block of cells with stabilizer
// level L. Within a block the differentials alternate between 1 -/+ gamma and
// the (signed) relative norm over G/L; the parity class is set by y, matching
// the anchored low differentials and making adjacent products the required
// 1 - gamma^[G:L].
GroupRingElement block_element(const GroupContext& g, int y, int p, int L) {
    int m = g.k - L;
    bool oriented = y % 2 == 0;
    if (oriented) return p % 2 == 0 ? zeta_bar(g, 1) : zeta(g, m);
    return p % 2 == 1 ? zeta(g, 1) : zeta_bar(g, m);
}

}  // namespace

BredonComplex chain_complex(const Grading& v) {
    BredonComplex c;
    c.k = v.k;
    c.direction = Direction::chain;
    c.cells = cell_structure(v);
    GroupContext g(v.k);
    const auto& stab = c.cells.stabilizer;
    int top = int(stab.size()) - 1;
    for (int s = 1; s <= top; ++s) {
        if (s == 1) {
            c.d.push_back(SpanMorphism(stab[1], v.k, stab[1], GroupRingElement::unit(v.k)));
        } else if (stab[s] == stab[s - 1]) {
            c.d.push_back(SpanMorphism(stab[s], stab[s], stab[s],
                                       block_element(g, v.y, s, stab[s])));
        } else {
            // block transition: the old block's element composed onto tr
            c.d.push_back(SpanMorphism(stab[s], stab[s - 1], stab[s],
                                       block_element(g, v.y, s, stab[s - 1])));
        }
    }
    return c;
}

BredonComplex cochain_complex(const Grading& v) {
    BredonComplex c;
    c.k = v.k;
    c.direction = Direction::cochain;
    c.cells = cell_structure(v);
    GroupContext g(v.k);
    const auto& stab = c.cells.stabilizer;
    int top = int(stab.size()) - 1;
    for (int s = 0; s < top; ++s) {
        if (s == 0) {
            c.d.push_back(SpanMorphism(v.k, stab[1], stab[1], GroupRingElement::unit(v.k)));
        } else if (stab[s + 1] == stab[s]) {
            c.d.push_back(SpanMorphism(stab[s], stab[s], stab[s],
                                       block_element(g, v.y, s + 1, stab[s])));
        } else {
            c.d.push_back(SpanMorphism(stab[s], stab[s + 1], stab[s + 1],
                                       block_element(g, v.y, s + 1, stab[s])));
        }
    }
    return c;
}

std::string BredonComplex::dump() const {
    std::string s = "S^{" + cells.v.str() + "} ";
    s += direction == Direction::chain ? "chain" : "cochain";
    s += " complex (k=" + std::to_string(k) + ")\n";
    for (int dim = 0; dim < int(cells.stabilizer.size()); ++dim) {
        s += "dim " + std::to_string(dim) + ": C_2^" + std::to_string(cells.stabilizer[dim]);
        if (direction == Direction::chain && dim >= 1)
            s += "  d: " + d[dim - 1].str();
        else if (direction == Direction::cochain && dim < int(d.size()))
            s += "  d: " + d[dim].str();
        s += "\n";
    }
    return s;
}

}  // namespace mackey
