#include "mackey/mackey_functor.hpp"

#include <nlohmann/json.hpp>

namespace mackey {

IntMat MackeyFunctor::gamma_power(int i, long long t) const {
    long long order = 1LL << (k - i);
    long long e = ((t % order) + order) % order;
    return gamma[i].pow(e);
}

FgAbMap MackeyFunctor::res_composite(int from, int to) const {
    assert(to <= from);
    FgAbMap m = FgAbMap::identity(level[from]);
    for (int i = from; i > to; --i) m = res_map(i).compose(m);
    return m;
}

FgAbMap MackeyFunctor::tr_composite(int from, int to) const {
    assert(from <= to);
    FgAbMap m = FgAbMap::identity(level[from]);
    for (int i = from + 1; i <= to; ++i) m = tr_map(i).compose(m);
    return m;
}

std::string MackeyFunctor::str() const {
    std::string s = "[";
    for (int i = k; i >= 0; --i) {
        if (i < k) s += " | ";
        s += level[i].str();
    }
    return s + "]";
}

std::vector<std::string> validate(const MackeyFunctor& m) {
    std::vector<std::string> report;
    auto bad = [&report](const std::string& what) { report.push_back(what); };

    if (int(m.level.size()) != m.k + 1 || int(m.gamma.size()) != m.k + 1 ||
        int(m.res.size()) != m.k + 1 || int(m.tr.size()) != m.k + 1) {
        bad("level/structure array sizes do not match k");
        return report;
    }
    for (int i = 0; i <= m.k; ++i) {
        int n = m.level[i].n_generators;
        if (m.gamma[i].rows() != n || m.gamma[i].cols() != n)
            bad("gamma dimension mismatch at level " + std::to_string(i));
        if (i >= 1) {
            if (m.res[i].rows() != m.level[i - 1].n_generators || m.res[i].cols() != n)
                bad("res dimension mismatch at level " + std::to_string(i));
            if (m.tr[i].rows() != n || m.tr[i].cols() != m.level[i - 1].n_generators)
                bad("tr dimension mismatch at level " + std::to_string(i));
        }
    }
    if (!report.empty()) return report;

    for (int i = 0; i <= m.k; ++i) {
        FgAbMap g(m.level[i], m.level[i], m.gamma[i]);
        if (!g.is_well_defined()) bad("gamma not well-defined at level " + std::to_string(i));
        FgAbMap gp(m.level[i], m.level[i], m.gamma_power(i, 1LL << (m.k - i)));
        if (!gp.equals(FgAbMap::identity(m.level[i])))
            bad("gamma^(2^" + std::to_string(m.k - i) + ") != id at level " + std::to_string(i) +
                " (Weyl group of C_2^" + std::to_string(i) + " has order 2^" +
                std::to_string(m.k - i) + ")");
    }
    for (int i = 1; i <= m.k; ++i) {
        FgAbMap r = m.res_map(i), t = m.tr_map(i);
        if (!r.is_well_defined()) bad("res not well-defined at level " + std::to_string(i));
        if (!t.is_well_defined()) bad("tr not well-defined at level " + std::to_string(i));
        FgAbMap rg(m.level[i], m.level[i - 1], m.res[i] * m.gamma[i]);
        FgAbMap gr(m.level[i], m.level[i - 1], m.gamma[i - 1] * m.res[i]);
        if (!rg.equals(gr)) bad("res does not commute with gamma at level " + std::to_string(i));
        FgAbMap tg(m.level[i - 1], m.level[i], m.tr[i] * m.gamma[i - 1]);
        FgAbMap gt(m.level[i - 1], m.level[i], m.gamma[i] * m.tr[i]);
        if (!tg.equals(gt)) bad("tr does not commute with gamma at level " + std::to_string(i));
        IntMat dcf = IntMat::identity(m.level[i - 1].n_generators) +
                     m.gamma_power(i - 1, 1LL << (m.k - i));
        FgAbMap rt(m.level[i - 1], m.level[i - 1], m.res[i] * m.tr[i]);
        if (!rt.equals(FgAbMap(m.level[i - 1], m.level[i - 1], dcf)))
            bad("double coset: res.tr != 1 + gamma^(2^" + std::to_string(m.k - i) +
                ") on level " + std::to_string(i - 1));
    }
    if (m.is_green && (m.unit < 0 || m.unit >= m.level[m.k].n_generators))
        bad("green flag set but unit index invalid");
    return report;
}

MackeyFunctor builtin_mackey(const std::string& name, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    MackeyFunctor m(k);
    m.name = name;
    if (name == "Z" || name == "F2" || name == "Zdual") {
        for (int i = 0; i <= k; ++i) {
            m.level[i] = name == "F2" ? FgAbGroup::cyclic(2) : FgAbGroup::free_group(1);
            m.gamma[i] = IntMat::identity(1);
        }
        Int r = name == "Zdual" ? 2 : 1;
        Int t = name == "Z" ? 2 : (name == "F2" ? 0 : 1);
        for (int i = 1; i <= k; ++i) {
            m.res[i] = IntMat::scalar(1, r);
            m.tr[i] = IntMat::scalar(1, t);
        }
        m.is_green = name != "Zdual";
        m.unit = m.is_green ? 0 : -1;
        return m;
    }
    if (name == "A") {
        // level i = Z<w_0 .. w_i>, w_j the class of C_{2^i}/C_{2^{i-j}}
        for (int i = 0; i <= k; ++i) {
            m.level[i] = FgAbGroup::free_group(i + 1);
            m.gamma[i] = IntMat::identity(i + 1);
        }
        for (int i = 1; i <= k; ++i) {
            IntMat r(i, i + 1);  // res(w_0)=w_0, res(w_j)=2 w_{j-1}
            r(0, 0) = 1;
            for (int j = 1; j <= i; ++j) r(j - 1, j) = 2;
            m.res[i] = r;
            IntMat t(i + 1, i);  // tr(w_j) = w_{j+1}
            for (int j = 0; j < i; ++j) t(j + 1, j) = 1;
            m.tr[i] = t;
        }
        m.is_green = true;
        m.unit = 0;
        return m;
    }
    throw std::invalid_argument("unknown built-in Mackey functor '" + name + "'");
}

std::vector<Int> green_multiply(const MackeyFunctor& m, int level, const std::vector<Int>& x,
                                const std::vector<Int>& y) {
    if (!m.is_green) throw std::invalid_argument("coefficient system is not Green");
    int n = m.level[level].n_generators;
    assert(int(x.size()) == n && int(y.size()) == n);
    std::vector<Int> out(n, Int(0));
    if (m.name == "Z" || m.name == "F2" || m.name == "Zdual") {
        out[0] = x[0] * y[0];
        return out;
    }
    if (m.name == "A") {
        // w_i * w_j = 2^min(i,j) w_max(i,j)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (x[i] == 0 || y[j] == 0) continue;
                out[std::max(i, j)] += x[i] * y[j] * (Int(1) << std::min(i, j));
            }
        return out;
    }
    throw std::invalid_argument("no multiplication table for custom Green functor");
}

MackeyFunctor truncate(const MackeyFunctor& m, int subgroup_index) {
    int i = subgroup_index;
    if (i < 0 || i > m.k) throw std::invalid_argument("truncation subgroup out of range");
    MackeyFunctor out(m.k - i);
    out.name = m.name.empty() ? "" : m.name + "#" + std::to_string(i);
    for (int j = 0; j <= out.k; ++j) {
        out.level[j] = m.level[i + j];
        out.gamma[j] = m.gamma[i + j];
        if (j >= 1) {
            out.res[j] = m.res[i + j];
            out.tr[j] = m.tr[i + j];
        }
    }
    out.is_green = m.is_green;
    out.unit = m.unit;
    return out;
}

MackeyFunctor restrict_down(const MackeyFunctor& m, int subgroup_index) {
    int i = subgroup_index;
    if (i < 0 || i > m.k) throw std::invalid_argument("restriction subgroup out of range");
    MackeyFunctor out(i);
    out.name = m.name.empty() ? "" : m.name + "|" + std::to_string(i);
    for (int j = 0; j <= i; ++j) {
        out.level[j] = m.level[j];
        out.gamma[j] = m.gamma_power(j, 1LL << (m.k - i));
        if (j >= 1) {
            out.res[j] = m.res[j];
            out.tr[j] = m.tr[j];
        }
    }
    if (m.is_green) {
        std::vector<Int> u(m.level[m.k].n_generators, Int(0));
        u[m.unit] = 1;
        std::vector<Int> ru = m.res_composite(m.k, i).matrix.apply(u);
        int idx = -1;
        for (int g = 0; g < int(ru.size()); ++g) {
            if (ru[g] == 1 && idx < 0)
                idx = g;
            else if (ru[g] != 0) {
                idx = -1;
                break;
            }
        }
        out.is_green = idx >= 0;
        out.unit = idx;
    }
    return out;
}

namespace {

// ker / coker of an endomorphism of a presented group, with bookkeeping.
HomologyData kernel_data(const FgAbGroup& n, const IntMat& a) {
    return homology(FgAbMap::zero_map(FgAbGroup::zero(), n), FgAbMap(n, n, a));
}
HomologyData cokernel_data(const FgAbGroup& n, const IntMat& a) {
    return homology(FgAbMap(n, n, a), FgAbMap::zero_map(n, FgAbGroup::zero()));
}

// The twisted variants are the plain ones applied to the sign-twisted module
// (gamma acting as -g0): that twist is what the non-orientable gradings induce
// on M(e), and it is what makes the double coset axiom hold at the top level.
MackeyFunctor from_module(int k, const FgAbGroup& n, const IntMat& g0_in, bool quotient,
                          bool twisted) {
    IntMat g0 = twisted ? -g0_in : g0_in;
    long long order = 1LL << k;
    if (!FgAbMap(n, n, g0.pow(order)).equals(FgAbMap::identity(n)))
        throw std::invalid_argument("gamma action order does not divide 2^k");
    MackeyFunctor m(k);
    std::vector<HomologyData> data(k + 1);
    IntMat id = IntMat::identity(n.n_generators);
    for (int i = 0; i <= k; ++i) {
        IntMat op = g0.pow(1LL << (k - i)) - id;
        data[i] = quotient ? cokernel_data(n, op) : kernel_data(n, op);
        m.level[i] = data[i].H;
    }
    for (int i = 0; i <= k; ++i) {
        FgAbMap g(n, n, g0);
        m.gamma[i] = induced_map(g, data[i], data[i]).matrix;
    }
    for (int i = 1; i <= k; ++i) {
        IntMat norm = id + g0.pow(1LL << (k - i));
        if (!quotient) {
            // fixed points: res = inclusion, tr = relative norm
            m.res[i] = induced_map(FgAbMap(n, n, id), data[i], data[i - 1]).matrix;
            m.tr[i] = induced_map(FgAbMap(n, n, norm), data[i - 1], data[i]).matrix;
        } else {
            // orbits: tr = projection, res = relative norm
            m.tr[i] = induced_map(FgAbMap(n, n, id), data[i - 1], data[i]).matrix;
            m.res[i] = induced_map(FgAbMap(n, n, norm), data[i], data[i - 1]).matrix;
        }
    }
    return m;
}

}  // namespace

MackeyFunctor fixed_point_functor(int k, const FgAbGroup& n, const IntMat& g0) {
    auto m = from_module(k, n, g0, false, false);
    m.name = "FP";
    return m;
}
MackeyFunctor fixed_quotient_functor(int k, const FgAbGroup& n, const IntMat& g0) {
    auto m = from_module(k, n, g0, true, false);
    m.name = "FQ";
    return m;
}
MackeyFunctor twisted_fixed_point_functor(int k, const FgAbGroup& n, const IntMat& g0) {
    auto m = from_module(k, n, g0, false, true);
    m.name = "TFP";
    return m;
}
MackeyFunctor twisted_fixed_quotient_functor(int k, const FgAbGroup& n, const IntMat& g0) {
    auto m = from_module(k, n, g0, true, true);
    m.name = "TFQ";
    return m;
}

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
    assert(a.k == b.k);
    MackeyFunctor m(a.k);
    for (int i = 0; i <= a.k; ++i) {
        m.level[i] = direct_sum(a.level[i], b.level[i]);
        m.gamma[i] = IntMat::dsum(a.gamma[i], b.gamma[i]);
        if (i >= 1) {
            m.res[i] = IntMat::dsum(a.res[i], b.res[i]);
            m.tr[i] = IntMat::dsum(a.tr[i], b.tr[i]);
        }
    }
    m.name = a.name + "+" + b.name;
    return m;
}

MackeyFunctor zero_mackey(int k) {
    MackeyFunctor m(k);
    m.name = "0";
    for (int i = 0; i <= k; ++i) {
        m.level[i] = FgAbGroup::zero();
        m.gamma[i] = IntMat(0, 0);
        if (i >= 1) {
            m.res[i] = IntMat(0, 0);
            m.tr[i] = IntMat(0, 0);
        }
    }
    return m;
}

namespace {

std::string render_element(const GroupRingElement& e) {
    GroupContext g(e.k);
    if (e == GroupRingElement::unit(e.k)) return "1";
    if (e.k >= 1) {
        if (e == zeta_bar(g, 1)) return "(1-g)";
        if (e == zeta(g, 1)) return "(1+g)";
    }
    for (int j = 2; j <= e.k; ++j) {
        if (e == zeta(g, j)) return "zeta_" + std::to_string(j);
        if (e == zeta_bar(g, j)) return "zetabar_" + std::to_string(j);
    }
    for (int mexp = 1; mexp <= e.k; ++mexp) {
        GroupRingElement diff =
            GroupRingElement::unit(e.k) - GroupRingElement::gamma_power(e.k, 1LL << mexp);
        if (e == diff) return "(1-g^" + std::to_string(1 << mexp) + ")";
    }
    return "(" + e.str() + ")";
}

}  // namespace

std::string SpanMorphism::str() const {
    std::string elt = render_element(element);
    std::string legs;
    if (target_level > middle_level)
        legs += "tr[" + std::to_string(target_level) + "<-" + std::to_string(middle_level) + "]";
    if (source_level > middle_level)
        legs += "res[" + std::to_string(source_level) + "->" + std::to_string(middle_level) + "]";
    if (legs.empty()) return elt;
    return (elt == "1" ? "" : elt) + legs;
}

FgAbMap eval_span(const MackeyFunctor& m, const SpanMorphism& s) {
    if (s.source_level > m.k || s.target_level > m.k)
        throw std::invalid_argument("span levels outside the Mackey functor");
    int mid = s.middle_level;
    const FgAbGroup& middle = m.level[mid];
    IntMat acc(middle.n_generators, middle.n_generators);
    for (size_t t = 0; t < s.element.coeff.size(); ++t) {
        if (s.element.coeff[t] == 0) continue;
        acc = acc + m.gamma_power(mid, (long long)t) * s.element.coeff[t];
    }
    FgAbMap middle_map(middle, middle, acc);
    return m.tr_composite(mid, s.target_level)
        .compose(middle_map)
        .compose(m.res_composite(s.source_level, mid));
}

SpanMorphism compose_spans(const GroupContext& g, const SpanMorphism& s2, const SpanMorphism& s1) {
    if (s1.target_level != s2.source_level)
        throw std::invalid_argument("spans do not compose: level mismatch");
    int b = s1.target_level;
    int w = std::min(s1.middle_level, s2.middle_level);
    int x = std::max(s1.middle_level, s2.middle_level);
    // res^B_{U2} . tr^B_{U1} = sum over B/max(U1,U2) of translations
    GroupRingElement cosets(g.k);
    long long step = 1LL << (g.k - b);
    for (long long j = 0; j < g.index(b, x); ++j)
        cosets = cosets + GroupRingElement::gamma_power(g.k, j * step);
    GroupRingElement total = ring_multiply(ring_multiply(s2.element, cosets), s1.element);
    return SpanMorphism(s1.source_level, s2.target_level, w, total);
}

nlohmann::json mackey_to_json(const MackeyFunctor& m) {
    nlohmann::json j;
    j["k"] = m.k;
    auto mat_to_json = [](const IntMat& a) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < a.cols(); ++c) row.push_back(a(i, c).convert_to<long long>());
            rows.push_back(row);
        }
        return rows;
    };
    j["levels"] = nlohmann::json::array();
    for (const auto& lev : m.level) {
        nlohmann::json rels = nlohmann::json::array();  // one entry per relator column
        for (int c = 0; c < lev.relations.cols(); ++c) {
            nlohmann::json col = nlohmann::json::array();
            for (int g = 0; g < lev.n_generators; ++g)
                col.push_back(lev.relations(g, c).convert_to<long long>());
            rels.push_back(col);
        }
        j["levels"].push_back({{"gens", lev.n_generators}, {"relations", rels}});
    }
    j["gamma"] = nlohmann::json::array();
    for (const auto& g : m.gamma) j["gamma"].push_back(mat_to_json(g));
    j["res"] = nlohmann::json::array();
    j["tr"] = nlohmann::json::array();
    for (int i = 1; i <= m.k; ++i) {
        j["res"].push_back(mat_to_json(m.res[i]));
        j["tr"].push_back(mat_to_json(m.tr[i]));
    }
    j["green"] = m.is_green;
    if (m.is_green)
        j["unit"] = m.unit;
    else
        j["unit"] = nullptr;
    return j;
}

MackeyFunctor mackey_from_json(const nlohmann::json& j) {
    auto mat_from_json = [](const nlohmann::json& rows, int expect_rows,
                            int expect_cols) -> IntMat {
        IntMat a(expect_rows, expect_cols);
        if (int(rows.size()) != expect_rows)
            throw std::invalid_argument("matrix row count mismatch in JSON");
        for (int i = 0; i < expect_rows; ++i) {
            if (int(rows[i].size()) != expect_cols)
                throw std::invalid_argument("matrix column count mismatch in JSON");
            for (int c = 0; c < expect_cols; ++c) a(i, c) = Int(rows[i][c].get<long long>());
        }
        return a;
    };
    int k = j.at("k").get<int>();
    MackeyFunctor m(k);
    const auto& levels = j.at("levels");
    if (int(levels.size()) != k + 1) throw std::invalid_argument("levels array must have k+1 entries");
    for (int i = 0; i <= k; ++i) {
        int gens = levels[i].at("gens").get<int>();
        const auto& rel = levels[i].at("relations");
        IntMat r(gens, int(rel.size()));
        for (int c = 0; c < int(rel.size()); ++c) {
            if (int(rel[c].size()) != gens)
                throw std::invalid_argument("relation length mismatch in JSON");
            for (int g = 0; g < gens; ++g) r(g, c) = Int(rel[c][g].get<long long>());
        }
        m.level[i] = FgAbGroup(gens, r);
    }
    for (int i = 0; i <= k; ++i) {
        int n = m.level[i].n_generators;
        m.gamma[i] = mat_from_json(j.at("gamma")[i], n, n);
    }
    for (int i = 1; i <= k; ++i) {
        m.res[i] = mat_from_json(j.at("res")[i - 1], m.level[i - 1].n_generators,
                                 m.level[i].n_generators);
        m.tr[i] = mat_from_json(j.at("tr")[i - 1], m.level[i].n_generators,
                                m.level[i - 1].n_generators);
    }
    m.is_green = j.value("green", false);
    if (j.contains("unit") && !j.at("unit").is_null()) m.unit = j.at("unit").get<int>();
    return m;
}

}  // namespace mackey
