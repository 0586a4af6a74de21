#include "mackey/abelian.hpp"

#include <map>

namespace mackey {

std::string group_name(const std::vector<Int>& invariants) {
    int rank = 0;
    std::map<Int, int> torsion;
    for (const Int& d : invariants) {
        if (d == 0)
            ++rank;
        else
            ++torsion[d];
    }
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty()) s += " + ";
        s += part;
    };
    if (rank == 1) append("Z");
    if (rank > 1) append("Z^" + std::to_string(rank));
    for (const auto& [d, count] : torsion) {
        std::string part = "Z/" + d.str();
        if (count > 1) part += "^" + std::to_string(count);
        append(part);
    }
    return s.empty() ? "0" : s;
}

std::string FgAbGroup::str() const { return group_name(invariant_factor_list()); }

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    return FgAbGroup(a.n_generators + b.n_generators, IntMat::dsum(a.relations, b.relations));
}

bool embeds(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> da = a.invariant_factor_list();
    std::vector<Int> db = b.invariant_factor_list();
    auto rank = [](const std::vector<Int>& d) {
        int r = 0;
        for (const Int& x : d)
            if (x == 0) ++r;
        return r;
    };
    if (rank(da) > rank(db)) return false;
    // For each prime power p^j, #elements of order dividing p^j must fit.
    // Collect primes from both torsion parts.
    std::vector<Int> primes;
    auto collect = [&primes](const std::vector<Int>& d) {
        for (Int x : d) {
            if (x == 0) continue;
            for (Int p = 2; p * p <= x; ++p)
                while (x % p == 0) {
                    primes.push_back(p);
                    while (x % p == 0) x /= p;
                    break;
                }
            if (x > 1) primes.push_back(x);
        }
    };
    collect(da);
    collect(db);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    int rb = rank(db);
    for (const Int& p : primes) {
        // exponents of p in each invariant factor
        auto exps = [&p](const std::vector<Int>& d) {
            std::vector<int> e;
            for (Int x : d) {
                if (x == 0) continue;
                int c = 0;
                while (x % p == 0) {
                    x /= p;
                    ++c;
                }
                if (c) e.push_back(c);
            }
            std::sort(e.rbegin(), e.rend());
            return e;
        };
        std::vector<int> ea = exps(da), eb = exps(db);
        // A ~ sum Z/p^{ea_i} embeds in B_p + Z^rb iff for all j:
        // #{i: ea_i >= j} <= #{i: eb_i >= j} + rb  ... free part absorbs any
        // finite torsion? No: Z has no torsion. Free rank cannot absorb torsion.
        for (size_t j = 0; j < ea.size(); ++j) {
            int need = 0;
            for (int e : ea)
                if (e >= ea[j]) ++need;
            int have = 0;
            for (int e : eb)
                if (e >= ea[j]) ++have;
            if (need > have) return false;
        }
    }
    return true;
}

std::optional<std::vector<Int>> HomologyData::project(const FgAbGroup& ambient_B,
                                                      const std::vector<Int>& v) const {
    // v = cycle_basis * c + ambient relations * y
    IntMat A = IntMat::hcat(cycle_basis, ambient_B.relations);
    auto sol = solve(A, v);
    if (!sol) return std::nullopt;
    std::vector<Int> c(sol->begin(), sol->begin() + cycle_basis.cols());
    return c;
}

HomologyData homology(const FgAbMap& d_in, const FgAbMap& d_out) {
    assert(d_in.tgt.n_generators == d_out.src.n_generators);
    const FgAbGroup& B = d_out.src;

    FgAbMap composite = d_out.compose(d_in);
    if (!composite.is_zero())
        throw ChainError("differential composite is nonzero: not a complex");

    // Cycles: x in Z^nB with d_out(x) in im(C relations), containing im(B rels).
    IntMat Z = kernel_mod_lattice(d_out.matrix, d_out.tgt.relations);

    // Boundaries: columns of d_in plus relations of B, expressed in Z-coordinates.
    IntMat bdry = IntMat::hcat(d_in.matrix, B.relations);
    auto W = solve_matrix(Z, bdry);
    if (!W) throw ChainError("boundaries do not lie in the cycle lattice");

    HomologyData h;
    h.cycle_basis = Z;
    h.H = FgAbGroup(Z.cols(), *W);
    return h;
}

FgAbMap induced_map(const FgAbMap& f, const HomologyData& h_src, const HomologyData& h_tgt) {
    // Map each source homology generator: lift to a cycle, apply f, express in
    // target cycles. Descent is checked by construction: failures throw.
    IntMat fm = f.matrix * h_src.cycle_basis;
    IntMat A = IntMat::hcat(h_tgt.cycle_basis, f.tgt.relations);
    auto sol = solve_matrix(A, fm);
    if (!sol) throw ChainError("map does not carry cycles to cycles");
    IntMat m(h_tgt.H.n_generators, h_src.H.n_generators);
    for (int j = 0; j < h_src.H.n_generators; ++j)
        for (int i = 0; i < h_tgt.H.n_generators; ++i) m(i, j) = (*sol)(i, j);
    FgAbMap out(h_src.H, h_tgt.H, m);
    if (!out.is_well_defined()) throw ChainError("map does not descend to homology");
    return out;
}

}  // namespace mackey
