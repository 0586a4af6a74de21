#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

// Irreducible labels in the order alpha, lambda_2, ..., lambda_k.
// label 1 is alpha; label j >= 2 is lambda_j. (lambda_1 = 2*alpha.)
using IrredLabel = int;
constexpr IrredLabel kAlpha = 1;

// Element of RO(C_{2^k}): x + y*alpha + sum a_j*lambda_j.
struct Grading {
    int k = 0;
    int x = 0;
    int y = 0;
    std::vector<int> a;  // a[j-2] = multiplicity of lambda_j, size max(k-1,0)

    Grading() = default;
    explicit Grading(int k_) : k(k_), a(std::max(k_ - 1, 0), 0) {}
    Grading(int k_, int x_, int y_, std::vector<int> a_) : k(k_), x(x_), y(y_), a(std::move(a_)) {
        if (int(a.size()) != std::max(k - 1, 0))
            throw std::invalid_argument("lambda coefficient count does not match k");
    }

    int lambda(int j) const {  // multiplicity of lambda_j, 2 <= j <= k
        if (j < 2 || j > k) throw std::invalid_argument("lambda index out of range");
        return a[j - 2];
    }
    int& lambda(int j) {
        if (j < 2 || j > k) throw std::invalid_argument("lambda index out of range");
        return a[j - 2];
    }

    int total_dim() const {
        int d = x + y;
        for (int c : a) d += 2 * c;
        return d;
    }
    int fixed_dim() const { return x; }

    bool is_actual() const {
        if (x < 0 || y < 0) return false;
        for (int c : a)
            if (c < 0) return false;
        return true;
    }
    bool is_orientable() const { return y % 2 == 0; }
    bool rep_part_is_zero() const {
        if (y != 0) return false;
        for (int c : a)
            if (c != 0) return false;
        return true;
    }

    // First/last label with nonzero coefficient in the order alpha, l2, ..., lk.
    std::optional<IrredLabel> lambda_min() const {
        if (y != 0) return kAlpha;
        for (int j = 2; j <= k; ++j)
            if (lambda(j) != 0) return j;
        return std::nullopt;
    }
    std::optional<IrredLabel> lambda_max() const {
        for (int j = k; j >= 2; --j)
            if (lambda(j) != 0) return j;
        if (y != 0) return kAlpha;
        return std::nullopt;
    }

    // Kernel subgroup index of a single label: ker(lambda_j) = C_{2^{k-j}},
    // ker(alpha) = G'.
    int label_kernel(IrredLabel l) const { return l == kAlpha ? k - 1 : k - l; }

    // G_V = G_{lambda_max}. Fails when the rep part is zero.
    std::optional<int> kernel() const {
        auto l = lambda_max();
        if (!l) return std::nullopt;
        return label_kernel(*l);
    }

    Grading operator+(const Grading& o) const {
        assert(k == o.k);
        Grading r = *this;
        r.x += o.x;
        r.y += o.y;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }
    Grading operator-(const Grading& o) const {
        assert(k == o.k);
        Grading r = *this;
        r.x -= o.x;
        r.y -= o.y;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }
    Grading operator-() const {
        Grading r = *this;
        r.x = -r.x;
        r.y = -r.y;
        for (int& c : r.a) c = -c;
        return r;
    }
    bool operator==(const Grading& o) const { return k == o.k && x == o.x && y == o.y && a == o.a; }
    bool operator<(const Grading& o) const {
        if (k != o.k) return k < o.k;
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return a < o.a;
    }

    static Grading trivial(int k, int x) {
        Grading g(k);
        g.x = x;
        return g;
    }
    static Grading alpha(int k, int mult = 1) {
        Grading g(k);
        g.y = mult;
        return g;
    }
    static Grading lambda_rep(int k, int j, int mult = 1) {
        Grading g(k);
        g.lambda(j) = mult;
        return g;
    }
    // The single irreducible `l` with multiplicity `mult`.
    static Grading irreducible(int k, IrredLabel l, int mult = 1) {
        return l == kAlpha ? alpha(k, mult) : lambda_rep(k, l, mult);
    }

    std::string str() const;
};

// Grammar: x=<int>[,a=<int>][,l<j>=<int>...] with 2 <= j <= k; absent keys
// default to 0. Round-trips with Grading::str().
Grading parse_grading(const std::string& text, int k);

// Restriction along C_{2^{k-s}} <= C_{2^k}: alpha becomes trivial, lambda_i
// for i <= s becomes 2 trivial, lambda_i for i > s becomes lambda_{i-s}
// (with lambda_1 = 2*alpha when i-s = 1).
Grading restrict_grading(const Grading& v, int subgroup_index);

}  // namespace mackey
