#include "mackey/grading.hpp"

#include <charconv>

namespace mackey {

std::string Grading::str() const {
    std::string s = "x=" + std::to_string(x);
    if (y != 0) s += ",a=" + std::to_string(y);
    for (int j = 2; j <= k; ++j)
        if (lambda(j) != 0) s += ",l" + std::to_string(j) + "=" + std::to_string(lambda(j));
    return s;
}

namespace {

int parse_int(const std::string& s) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("malformed integer '" + s + "' in grading");
    return value;
}

}  // namespace

Grading parse_grading(const std::string& text, int k) {
    Grading g(k);
    bool seen_x = false, seen_a = false;
    std::vector<bool> seen_l(std::max(k + 1, 2), false);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value in grading: '" + item + "'");
        std::string key = item.substr(0, eq);
        int value = parse_int(item.substr(eq + 1));
        if (key == "x") {
            if (seen_x) throw std::invalid_argument("duplicate key x");
            seen_x = true;
            g.x = value;
        } else if (key == "a") {
            if (seen_a) throw std::invalid_argument("duplicate key a");
            seen_a = true;
            g.y = value;
        } else if (key.size() >= 2 && key[0] == 'l') {
            int j = parse_int(key.substr(1));
            if (j < 2 || j > k)
                throw std::invalid_argument("lambda index " + std::to_string(j) +
                                            " out of range for k=" + std::to_string(k));
            if (seen_l[j]) throw std::invalid_argument("duplicate key " + key);
            seen_l[j] = true;
            g.lambda(j) = value;
        } else {
            throw std::invalid_argument("unknown grading key '" + key + "'");
        }
    }
    return g;
}

Grading restrict_grading(const Grading& v, int subgroup_index) {
    if (subgroup_index < 0 || subgroup_index > v.k)
        throw std::invalid_argument("subgroup index out of range");
    int s = v.k - subgroup_index;
    if (s == 0) return v;
    Grading r(subgroup_index);
    r.x = v.x + v.y;
    for (int i = 2; i <= s && i <= v.k; ++i) r.x += 2 * v.lambda(i);
    for (int i = s + 1; i <= v.k; ++i) {
        int target = i - s;
        if (target == 1)
            r.y += 2 * v.lambda(i);  // lambda_1 = 2 alpha
        else
            r.lambda(target) += v.lambda(i);
    }
    return r;
}

}  // namespace mackey
