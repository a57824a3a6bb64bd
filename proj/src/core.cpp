#include "hovm/core.hpp"

#include <algorithm>
#include <numeric>

namespace hovm {

std::string NodeSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int v : one_based()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

bool lex_less(NodeSet a, NodeSet b) {
    if (a == b) return false;
    auto x = a.elements(), y = b.elements();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

void sort_sets(std::vector<NodeSet>& v) {
    std::sort(v.begin(), v.end(), NodeSetLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

int height(const Depth& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool nonnegative(const Depth& c) {
    return std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
}

bool dominates(const Depth& a, const Depth& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

Depth add(const Depth& a, const Depth& b) {
    Depth r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Depth sub(const Depth& a, const Depth& b) {
    Depth r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

std::string depth_str(const Depth& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

namespace {
void fill(std::vector<Depth>& out, Depth& cur, std::size_t pos, int left, NodeSet support) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    int top = support.contains(static_cast<int>(pos)) ? left : 0;
    for (int v = 0; v <= top; ++v) {
        cur[pos] = v;
        fill(out, cur, pos + 1, left - v, support);
    }
    cur[pos] = 0;
}
}  // namespace

std::vector<Depth> depths_up_to(int rank, int n, NodeSet support) {
    std::vector<Depth> out;
    if (n < 0) return out;
    Depth cur(rank, 0);
    fill(out, cur, 0, n, support);
    return out;
}

std::vector<Depth> depths_up_to(int rank, int n) {
    return depths_up_to(rank, n, NodeSet::full(rank));
}

}  // namespace hovm
