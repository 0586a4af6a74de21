#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mackey/intmat.hpp"

namespace mackey {

// Default cap on k in G = C_{2^k}; matrix sizes in the cellular module grow
// linearly in 2^k per level. Overridable via MACKEY_KMAX.
int k_max();

// G = C_{2^k}. Subgroups are exactly C_{2^i}, identified by the index i.
struct GroupContext {
    int k = 0;

    explicit GroupContext(int k_) : k(k_) {
        if (k < 0 || k > k_max())
            throw std::invalid_argument("group size k out of range [0, K_MAX]");
    }
    long long order() const { return 1LL << k; }
    int subgroup_order(int i) const { return 1 << i; }
    // [C_{2^a} : C_{2^b}] for b <= a
    long long index(int a, int b) const { return 1LL << (a - b); }
    bool valid_subgroup(int i) const { return i >= 0 && i <= k; }
};

// Element of Z[C_{2^k}]; coefficient i belongs to gamma^i.
struct GroupRingElement {
    int k = 0;
    std::vector<Int> coeff;  // length 2^k, indices mod 2^k

    explicit GroupRingElement(int k_) : k(k_), coeff(size_t(1) << k_, Int(0)) {}

    static GroupRingElement unit(int k) {
        GroupRingElement e(k);
        e.coeff[0] = 1;
        return e;
    }
    // gamma^t (t reduced mod 2^k at construction: canonical form)
    static GroupRingElement gamma_power(int k, long long t) {
        GroupRingElement e(k);
        long long n = 1LL << k;
        e.coeff[size_t(((t % n) + n) % n)] = 1;
        return e;
    }

    GroupRingElement operator+(const GroupRingElement& o) const {
        assert(k == o.k);
        GroupRingElement r(k);
        for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] + o.coeff[i];
        return r;
    }
    GroupRingElement operator-(const GroupRingElement& o) const {
        assert(k == o.k);
        GroupRingElement r(k);
        for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] - o.coeff[i];
        return r;
    }
    bool operator==(const GroupRingElement& o) const { return k == o.k && coeff == o.coeff; }
    bool is_zero() const {
        for (const Int& c : coeff)
            if (c != 0) return false;
        return true;
    }

    std::string str() const;
};

// Convolution product in Z[Z/2^k]; commutative.
GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

// zeta_j = sum_{0 <= i < 2^j} gamma^i; zeta_k is the norm.
GroupRingElement zeta(const GroupContext& g, int j);
// zetabar_j = sum_{0 <= i < 2^j} (-gamma)^i
GroupRingElement zeta_bar(const GroupContext& g, int j);

// G/H x G/K decomposed into orbits. The decomposition is canonical: copy t is
// the orbit of (eH, gamma^t K), for t in [0, copies).
struct OrbitProduct {
    int copies = 1;
    int stabilizer = 0;               // subgroup index, = min(H, K)
    std::vector<long long> coset_reps;  // gamma^t per copy
};

OrbitProduct orbit_product(const GroupContext& g, int H, int K);

}  // namespace mackey
