#include "mackey/group.hpp"

#include <cstdlib>

namespace mackey {

int k_max() {
    static int cached = [] {
        if (const char* env = std::getenv("MACKEY_KMAX")) {
            int v = std::atoi(env);
            if (v > 0 && v <= 20) return v;
        }
        return 6;
    }();
    return cached;
}

std::string GroupRingElement::str() const {
    std::string s;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] == 0) continue;
        Int c = coeff[i];
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? "-" : "+";
            if (c < 0) c = -c;
        }
        std::string term;
        if (i == 0)
            term = c.str();
        else {
            if (c != 1) term = c.str() + "*";
            term += "g";
            if (i > 1) term += "^" + std::to_string(i);
        }
        s += term;
    }
    return s.empty() ? "0" : s;
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.k != b.k) throw std::invalid_argument("group ring elements from different groups");
    GroupRingElement r(a.k);
    size_t n = a.coeff.size();
    for (size_t i = 0; i < n; ++i) {
        if (a.coeff[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.coeff[j] == 0) continue;
            r.coeff[(i + j) % n] += a.coeff[i] * b.coeff[j];
        }
    }
    return r;
}

GroupRingElement zeta(const GroupContext& g, int j) {
    if (j < 0 || j > g.k) throw std::invalid_argument("zeta index out of range");
    GroupRingElement e(g.k);
    for (int i = 0; i < (1 << j); ++i) e.coeff[i] = 1;
    return e;
}

GroupRingElement zeta_bar(const GroupContext& g, int j) {
    if (j < 0 || j > g.k) throw std::invalid_argument("zeta index out of range");
    GroupRingElement e(g.k);
    for (int i = 0; i < (1 << j); ++i) e.coeff[i] = (i % 2 == 0) ? 1 : -1;
    return e;
}

OrbitProduct orbit_product(const GroupContext& g, int H, int K) {
    if (!g.valid_subgroup(H) || !g.valid_subgroup(K))
        throw std::invalid_argument("subgroup index out of range");
    OrbitProduct p;
    p.stabilizer = std::min(H, K);
    p.copies = int(g.index(g.k, std::max(H, K)));
    p.coset_reps.resize(p.copies);
    for (int t = 0; t < p.copies; ++t) p.coset_reps[t] = t;
    return p;
}

}  // namespace mackey
