#include "mackey/evaluate.hpp"

namespace mackey {

namespace {

struct Located {
    int copy;
    long long translation;  // gamma power carried into the copy identification
};

// Canonical position of the point (A, gamma^s B) in the orbit decomposition
// of G/A x G/B: copy t in [0, 2^{k-max(a,b)}), translated by gamma^g with
// gamma^g in A.
Located locate(int k, int a, int b, long long s) {
    long long c = 1LL << (k - std::max(a, b));
    long long t = ((s % c) + c) % c;
    long long g = (a >= b) ? s - t : 0;
    return {int(t), g};
}

int twist_sign(int twist, long long g) { return (twist < 0 && (g & 1)) ? -1 : 1; }

void add_block(IntMat& out, int block_rows, int block_cols, int br, int bc, const IntMat& blk,
               int sign) {
    for (int i = 0; i < block_rows; ++i)
        for (int j = 0; j < block_cols; ++j)
            out(br * block_rows + i, bc * block_cols + j) += sign > 0 ? blk(i, j) : -blk(i, j);
}

}  // namespace

LevelTerm make_term(const MackeyFunctor& m, int level, int cell_stab) {
    LevelTerm t;
    t.level = level;
    t.cell_stab = cell_stab;
    t.module_level = std::min(level, cell_stab);
    t.copies = 1 << (m.k - std::max(level, cell_stab));
    FgAbGroup g = FgAbGroup::zero();
    for (int i = 0; i < t.copies; ++i) g = direct_sum(g, m.level[t.module_level]);
    t.group = g;
    return t;
}

IntMat expand_ring_element(const MackeyFunctor& m, int level, int cell_stab,
                           const GroupRingElement& elt, int twist) {
    int c = 1 << (m.k - std::max(level, cell_stab));
    int mm = std::min(level, cell_stab);
    int n = m.level[mm].n_generators;
    IntMat out(c * n, c * n);
    for (size_t w = 0; w < elt.coeff.size(); ++w) {
        if (elt.coeff[w] == 0) continue;
        for (int t = 0; t < c; ++t) {
            Located loc = locate(m.k, level, cell_stab, t + (long long)w);
            IntMat blk = m.gamma_power(mm, loc.translation) * elt.coeff[w];
            add_block(out, n, n, loc.copy, t, blk, twist_sign(twist, loc.translation));
        }
    }
    return out;
}

IntMat expand_second_transfer(const MackeyFunctor& m, int level, int from_stab, int to_stab,
                              int twist) {
    assert(from_stab <= to_stab);
    int cf = 1 << (m.k - std::max(level, from_stab));
    int ct = 1 << (m.k - std::max(level, to_stab));
    int mf = std::min(level, from_stab), mt = std::min(level, to_stab);
    int nf = m.level[mf].n_generators, nt = m.level[mt].n_generators;
    IntMat trc = m.tr_composite(mf, mt).matrix;
    IntMat out(ct * nt, cf * nf);
    for (int t = 0; t < cf; ++t) {
        Located loc = locate(m.k, level, to_stab, t);
        IntMat blk = trc * m.gamma_power(mf, loc.translation);
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < nf; ++j)
                out(loc.copy * nt + i, t * nf + j) +=
                    twist_sign(twist, loc.translation) > 0 ? blk(i, j) : -blk(i, j);
    }
    return out;
}

IntMat expand_second_restriction(const MackeyFunctor& m, int level, int from_stab, int to_stab,
                                 int twist) {
    assert(to_stab <= from_stab);
    int cf = 1 << (m.k - std::max(level, from_stab));
    int ct = 1 << (m.k - std::max(level, to_stab));
    int mf = std::min(level, from_stab), mt = std::min(level, to_stab);
    int nf = m.level[mf].n_generators, nt = m.level[mt].n_generators;
    IntMat rc = m.res_composite(mf, mt).matrix;
    IntMat out(ct * nt, cf * nf);
    for (int t = 0; t < ct; ++t) {
        Located loc = locate(m.k, level, from_stab, t);
        IntMat blk = m.gamma_power(mt, -loc.translation) * rc;
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < nf; ++j)
                out(t * nt + i, loc.copy * nf + j) +=
                    twist_sign(twist, loc.translation) > 0 ? blk(i, j) : -blk(i, j);
    }
    return out;
}

IntMat expand_level_restriction(const MackeyFunctor& m, int from_level, int cell_stab, int twist) {
    int h = from_level;
    assert(h >= 1);
    int cf = 1 << (m.k - std::max(h, cell_stab));
    int ct = 1 << (m.k - std::max(h - 1, cell_stab));
    int mf = std::min(h, cell_stab), mt = std::min(h - 1, cell_stab);
    int nf = m.level[mf].n_generators, nt = m.level[mt].n_generators;
    IntMat rc = m.res_composite(mf, mt).matrix;
    IntMat out(ct * nt, cf * nf);
    for (int t = 0; t < ct; ++t) {
        Located loc = locate(m.k, h, cell_stab, t);
        IntMat blk = m.gamma_power(mt, -loc.translation) * rc;
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < nf; ++j)
                out(t * nt + i, loc.copy * nf + j) +=
                    twist_sign(twist, loc.translation) > 0 ? blk(i, j) : -blk(i, j);
    }
    return out;
}

IntMat expand_level_transfer(const MackeyFunctor& m, int to_level, int cell_stab, int twist) {
    int h = to_level;
    assert(h >= 1);
    int cf = 1 << (m.k - std::max(h - 1, cell_stab));
    int ct = 1 << (m.k - std::max(h, cell_stab));
    int mf = std::min(h - 1, cell_stab), mt = std::min(h, cell_stab);
    int nf = m.level[mf].n_generators, nt = m.level[mt].n_generators;
    IntMat trc = m.tr_composite(mf, mt).matrix;
    IntMat out(ct * nt, cf * nf);
    for (int t = 0; t < cf; ++t) {
        Located loc = locate(m.k, h, cell_stab, t);
        IntMat blk = trc * m.gamma_power(mf, loc.translation);
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < nf; ++j)
                out(loc.copy * nt + i, t * nf + j) +=
                    twist_sign(twist, loc.translation) > 0 ? blk(i, j) : -blk(i, j);
    }
    return out;
}

IntMat expand_level_gamma(const MackeyFunctor& m, int level, int cell_stab, int twist) {
    int c = 1 << (m.k - std::max(level, cell_stab));
    int mm = std::min(level, cell_stab);
    int n = m.level[mm].n_generators;
    IntMat out(c * n, c * n);
    for (int t = 0; t < c; ++t) {
        Located loc = locate(m.k, level, cell_stab, t - 1);
        long long g = 1 + loc.translation;
        IntMat blk = m.gamma_power(mm, g);
        add_block(out, n, n, loc.copy, t, blk, twist_sign(twist, g));
    }
    return out;
}

FgAbMap expand_span(const MackeyFunctor& m, int level, const SpanMorphism& s, int twist) {
    LevelTerm src = make_term(m, level, s.source_level);
    LevelTerm mid = make_term(m, level, s.middle_level);
    LevelTerm tgt = make_term(m, level, s.target_level);
    IntMat r = expand_second_restriction(m, level, s.source_level, s.middle_level, twist);
    IntMat e = expand_ring_element(m, level, s.middle_level, s.element, twist);
    IntMat t = expand_second_transfer(m, level, s.middle_level, s.target_level, twist);
    return FgAbMap(src.group, tgt.group, t * (e * r));
}

FgAbMap LevelComplex::incoming(int n) const {
    if (direction == Direction::chain)
        return n < top_dim() ? diff[n] : FgAbMap::zero_map(FgAbGroup::zero(), terms[n].group);
    return n > 0 ? diff[n - 1] : FgAbMap::zero_map(FgAbGroup::zero(), terms[n].group);
}

FgAbMap LevelComplex::outgoing(int n) const {
    if (direction == Direction::chain)
        return n > 0 ? diff[n - 1] : FgAbMap::zero_map(terms[n].group, FgAbGroup::zero());
    return n < top_dim() ? diff[n] : FgAbMap::zero_map(terms[n].group, FgAbGroup::zero());
}

LevelComplex evaluate_at_level(const BredonComplex& c, const MackeyFunctor& m, int level,
                               int twist) {
    LevelComplex lc;
    lc.level = level;
    lc.direction = c.direction;
    for (int stab : c.cells.stabilizer) lc.terms.push_back(make_term(m, level, stab));
    for (size_t i = 0; i < c.d.size(); ++i) lc.diff.push_back(expand_span(m, level, c.d[i], twist));
    return lc;
}

bool complex_is_valid(const BredonComplex& c, const MackeyFunctor& m) {
    for (int h = 0; h <= m.k; ++h) {
        LevelComplex lc = evaluate_at_level(c, m, h);
        for (size_t i = 0; i + 1 < lc.diff.size(); ++i) {
            FgAbMap comp = c.direction == Direction::chain ? lc.diff[i].compose(lc.diff[i + 1])
                                                           : lc.diff[i + 1].compose(lc.diff[i]);
            if (!comp.is_zero()) return false;
        }
    }
    return true;
}

bool MackeyMorphism::commutes() const {
    int k = src.k;
    for (int i = 0; i <= k; ++i) {
        FgAbMap lhs = at[i].compose(FgAbMap(src.level[i], src.level[i], src.gamma[i]));
        FgAbMap rhs = FgAbMap(tgt.level[i], tgt.level[i], tgt.gamma[i]).compose(at[i]);
        if (!lhs.equals(rhs)) return false;
    }
    for (int i = 1; i <= k; ++i) {
        if (!at[i - 1].compose(src.res_map(i)).equals(tgt.res_map(i).compose(at[i]))) return false;
        if (!at[i].compose(src.tr_map(i)).equals(tgt.tr_map(i).compose(at[i - 1]))) return false;
    }
    return true;
}

bool MackeyMorphism::is_isomorphism() const {
    for (const auto& f : at)
        if (!f.is_isomorphism()) return false;
    return commutes();
}

bool MackeyMorphism::is_zero() const {
    for (const auto& f : at)
        if (!f.is_zero()) return false;
    return true;
}

MackeyHomology homology_mackey(const BredonComplex& c, const MackeyFunctor& m, int n, int twist) {
    MackeyHomology out;
    out.degree = n;
    out.direction = c.direction;
    out.functor = MackeyFunctor(m.k);
    out.functor.name = "H";
    if (n < 0 || n > c.top_dim()) {
        for (int h = 0; h <= m.k; ++h) {
            out.functor.level[h] = FgAbGroup::zero();
            out.functor.gamma[h] = IntMat(0, 0);
            if (h >= 1) {
                out.functor.res[h] = IntMat(0, 0);
                out.functor.tr[h] = IntMat(0, 0);
            }
        }
        return out;
    }
    int stab = c.cells.stabilizer[n];
    for (int h = 0; h <= m.k; ++h) {
        LevelComplex lc = evaluate_at_level(c, m, h, twist);
        out.data.push_back(homology(lc.incoming(n), lc.outgoing(n)));
        out.complexes.push_back(std::move(lc));
        out.functor.level[h] = out.data[h].H;
    }
    for (int h = 0; h <= m.k; ++h) {
        FgAbMap g(out.complexes[h].terms[n].group, out.complexes[h].terms[n].group,
                  expand_level_gamma(m, h, stab, twist));
        out.functor.gamma[h] = induced_map(g, out.data[h], out.data[h]).matrix;
        if (h >= 1) {
            FgAbMap r(out.complexes[h].terms[n].group, out.complexes[h - 1].terms[n].group,
                      expand_level_restriction(m, h, stab, twist));
            out.functor.res[h] = induced_map(r, out.data[h], out.data[h - 1]).matrix;
            FgAbMap t(out.complexes[h - 1].terms[n].group, out.complexes[h].terms[n].group,
                      expand_level_transfer(m, h, stab, twist));
            out.functor.tr[h] = induced_map(t, out.data[h - 1], out.data[h]).matrix;
        }
    }
    return out;
}

MackeyHomology homology_mackey(const Grading& v, const MackeyFunctor& m, int n, Direction dir) {
    BredonComplex c = dir == Direction::chain ? chain_complex(v) : cochain_complex(v);
    return homology_mackey(c, m, n, 1);
}

MackeyMorphism skeleton_mult_map(const Grading& v, const Grading& w, const MackeyFunctor& m,
                                 int n, Direction dir) {
    BredonComplex small =
        dir == Direction::chain ? chain_complex(v) : cochain_complex(v);
    BredonComplex big =
        dir == Direction::chain ? chain_complex(v + w) : cochain_complex(v + w);
    int cut = small.top_dim();
    for (int s = 0; s <= cut; ++s)
        if (big.cells.stabilizer[s] != small.cells.stabilizer[s])
            throw std::invalid_argument("skeleton condition violated: stabilizer order broken");
    for (size_t i = 0; i < small.d.size(); ++i) {
        // within-skeleton differentials must agree exactly
        if (!(small.d[i].source_level == big.d[i].source_level &&
              small.d[i].target_level == big.d[i].target_level &&
              small.d[i].middle_level == big.d[i].middle_level &&
              small.d[i].element == big.d[i].element))
            throw std::invalid_argument("skeleton condition violated: differentials differ");
    }
    MackeyHomology hs = homology_mackey(small, m, n, 1);
    MackeyHomology hb = homology_mackey(big, m, n, 1);
    MackeyMorphism mor;
    if (dir == Direction::chain) {
        mor.src = hs.functor;
        mor.tgt = hb.functor;
    } else {
        mor.src = hb.functor;
        mor.tgt = hs.functor;
    }
    for (int h = 0; h <= m.k; ++h) {
        if (n > cut || n < 0) {
            // outside the small skeleton: the map is zero from/to the zero group
            if (dir == Direction::chain)
                mor.at.push_back(FgAbMap::zero_map(hs.functor.level[h], hb.functor.level[h]));
            else
                mor.at.push_back(FgAbMap::zero_map(hb.functor.level[h], hs.functor.level[h]));
            continue;
        }
        const FgAbGroup& term_small = hs.complexes[h].terms[n].group;
        const FgAbGroup& term_big = hb.complexes[h].terms[n].group;
        assert(term_small.n_generators == term_big.n_generators);
        IntMat id = IntMat::identity(term_small.n_generators);
        if (dir == Direction::chain) {
            FgAbMap f(term_small, term_big, id);
            mor.at.push_back(induced_map(f, hs.data[h], hb.data[h]));
        } else {
            FgAbMap f(term_big, term_small, id);
            mor.at.push_back(induced_map(f, hb.data[h], hs.data[h]));
        }
    }
    return mor;
}

BredonComplex unit_sphere_complex(int k, int s) {
    BredonComplex c;
    c.k = k;
    c.direction = Direction::chain;
    c.cells.v = Grading(k);
    if (s == kAlpha) {
        c.cells.stabilizer = {k - 1};
        return c;
    }
    if (s < 2 || s > k) throw std::invalid_argument("invalid irreducible label for unit sphere");
    int L = k - s;
    c.cells.stabilizer = {L, L};
    GroupRingElement d = GroupRingElement::unit(k) - GroupRingElement::gamma_power(k, 1);
    c.d.push_back(SpanMorphism(L, L, L, d));
    return c;
}

MackeyHomology unit_sphere_homology(int s, const MackeyFunctor& m, int total_degree,
                                    bool orientable) {
    BredonComplex c = unit_sphere_complex(m.k, s);
    int twist = orientable ? 1 : -1;
    return homology_mackey(c, m, total_degree, twist);
}

bool image_equals_kernel(const FgAbMap& f, const FgAbMap& g) {
    assert(f.tgt.n_generators == g.src.n_generators);
    const FgAbGroup& b = g.src;
    IntMat image = IntMat::hcat(f.matrix, b.relations);
    IntMat kernel = IntMat::hcat(kernel_mod_lattice(g.matrix, g.tgt.relations), b.relations);
    return lattice_contains_all(image, kernel) && lattice_contains_all(kernel, image);
}

namespace {

LevelComplex slice_complex(const LevelComplex& big, int from, int to) {
    LevelComplex out;
    out.level = big.level;
    out.direction = big.direction;
    for (int s = from; s <= to; ++s) out.terms.push_back(big.terms[s]);
    if (big.direction == Direction::chain) {
        // diff[i]: term i+1 -> term i within the slice
        for (int s = from; s < to; ++s) out.diff.push_back(big.diff[s]);
    } else {
        for (int s = from; s < to; ++s) out.diff.push_back(big.diff[s]);
    }
    return out;
}

}  // namespace

LesRow build_les_row(const BredonComplex& big, const MackeyFunctor& m, int level, int cut) {
    LesRow row;
    row.level = level;
    row.direction = big.direction;
    row.cut = cut;
    LevelComplex lc = evaluate_at_level(big, m, level, 1);
    int top = lc.top_dim();
    assert(cut >= 0 && cut < top);

    LevelComplex low = slice_complex(lc, 0, cut);
    LevelComplex high = slice_complex(lc, cut + 1, top);
    // `first` is the subobject: the bottom skeleton for chains, the top block
    // for cochains.
    const LevelComplex& sub = big.direction == Direction::chain ? low : high;
    const LevelComplex& quot = big.direction == Direction::chain ? high : low;
    int sub_from = big.direction == Direction::chain ? 0 : cut + 1;
    int quot_from = big.direction == Direction::chain ? cut + 1 : 0;

    for (int n = 0; n <= top; ++n) {
        int ns = n - sub_from;
        if (ns >= 0 && ns <= sub.top_dim())
            row.first.push_back(homology(sub.incoming(ns), sub.outgoing(ns)));
        else
            row.first.push_back(homology(FgAbMap::zero_map(FgAbGroup::zero(), FgAbGroup::zero()),
                                         FgAbMap::zero_map(FgAbGroup::zero(), FgAbGroup::zero())));
        row.middle.push_back(homology(lc.incoming(n), lc.outgoing(n)));
        int nq = n - quot_from;
        if (nq >= 0 && nq <= quot.top_dim())
            row.last.push_back(homology(quot.incoming(nq), quot.outgoing(nq)));
        else
            row.last.push_back(homology(FgAbMap::zero_map(FgAbGroup::zero(), FgAbGroup::zero()),
                                        FgAbMap::zero_map(FgAbGroup::zero(), FgAbGroup::zero())));
    }
    for (int n = 0; n <= top; ++n) {
        int ns = n - sub_from;
        if (ns >= 0 && ns <= sub.top_dim()) {
            FgAbMap f(sub.terms[ns].group, lc.terms[n].group,
                      IntMat::identity(lc.terms[n].group.n_generators));
            row.incl.push_back(induced_map(f, row.first[n], row.middle[n]));
        } else {
            row.incl.push_back(FgAbMap::zero_map(row.first[n].H, row.middle[n].H));
        }
        int nq = n - quot_from;
        if (nq >= 0 && nq <= quot.top_dim()) {
            FgAbMap f(lc.terms[n].group, quot.terms[nq].group,
                      IntMat::identity(lc.terms[n].group.n_generators));
            row.proj.push_back(induced_map(f, row.middle[n], row.last[n]));
        } else {
            row.proj.push_back(FgAbMap::zero_map(row.middle[n].H, row.last[n].H));
        }
    }
    if (big.direction == Direction::chain) {
        // H_{cut+1}(Q) -> H_cut(sub), induced by the big differential
        FgAbMap d(lc.terms[cut + 1].group, lc.terms[cut].group, lc.diff[cut].matrix);
        row.connecting = induced_map(d, row.last[cut + 1], row.first[cut]);
    } else {
        // H^cut(small) -> H^{cut+1}(T)
        FgAbMap d(lc.terms[cut].group, lc.terms[cut + 1].group, lc.diff[cut].matrix);
        row.connecting = induced_map(d, row.last[cut], row.first[cut + 1]);
    }
    return row;
}

std::vector<std::string> LesRow::exactness_failures() const {
    std::vector<std::string> fails;
    int top = int(middle.size()) - 1;
    auto zero_between = [](const FgAbGroup& a, const FgAbGroup& b) {
        return FgAbMap::zero_map(a, b);
    };
    // delta at position n: chains H_{n+1}(last) -> H_n(first) live at n = cut;
    // cochains H^{n-1}(last) -> H^n(first) live at n = cut+1.
    auto delta_out_of_last = [&](int n) -> FgAbMap {
        if (direction == Direction::chain)
            return n == cut + 1 ? connecting : zero_between(last[n].H, n > 0 ? first[n - 1].H
                                                                             : FgAbGroup::zero());
        return n == cut ? connecting
                        : zero_between(last[n].H, n < top ? first[n + 1].H : FgAbGroup::zero());
    };
    auto delta_into_first = [&](int n) -> FgAbMap {
        if (direction == Direction::chain)
            return n == cut ? connecting
                            : zero_between(n < top ? last[n + 1].H : FgAbGroup::zero(), first[n].H);
        return n == cut + 1 ? connecting
                            : zero_between(n > 0 ? last[n - 1].H : FgAbGroup::zero(), first[n].H);
    };
    for (int n = 0; n <= top; ++n) {
        if (!image_equals_kernel(delta_into_first(n), incl[n]))
            fails.push_back("not exact at first[" + std::to_string(n) + "]");
        if (!image_equals_kernel(incl[n], proj[n]))
            fails.push_back("not exact at middle[" + std::to_string(n) + "]");
        if (!image_equals_kernel(proj[n], delta_out_of_last(n)))
            fails.push_back("not exact at last[" + std::to_string(n) + "]");
    }
    return fails;
}

}  // namespace mackey
