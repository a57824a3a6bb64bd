#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hovm {

// Internal node indices are 0-based; JSON and printed output are 1-based.
class NodeSet {
public:
    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint32_t mask) : mask_(mask) {}

    static NodeSet of(std::initializer_list<int> nodes) {
        NodeSet s;
        for (int v : nodes) s.insert(v);
        return s;
    }
    static NodeSet from(const std::vector<int>& nodes) {
        NodeSet s;
        for (int v : nodes) s.insert(v);
        return s;
    }
    static constexpr NodeSet full(int n) {
        return NodeSet(n >= 32 ? ~0u : ((1u << n) - 1u));
    }

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
    constexpr void insert(int i) { mask_ |= (1u << i); }
    constexpr void erase(int i) { mask_ &= ~(1u << i); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool subset_of(NodeSet o) const { return (mask_ & ~o.mask_) == 0; }
    constexpr bool intersects(NodeSet o) const { return (mask_ & o.mask_) != 0; }

    constexpr NodeSet operator|(NodeSet o) const { return NodeSet(mask_ | o.mask_); }
    constexpr NodeSet operator&(NodeSet o) const { return NodeSet(mask_ & o.mask_); }
    constexpr NodeSet operator-(NodeSet o) const { return NodeSet(mask_ & ~o.mask_); }
    constexpr NodeSet operator^(NodeSet o) const { return NodeSet(mask_ ^ o.mask_); }
    constexpr bool operator==(const NodeSet&) const = default;

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }
    // 1-based sorted list, as used in JSON
    std::vector<int> one_based() const {
        auto e = elements();
        for (int& v : e) ++v;
        return e;
    }
    static NodeSet from_one_based(const std::vector<int>& nodes) {
        NodeSet s;
        for (int v : nodes) s.insert(v - 1);
        return s;
    }
    std::string str() const;

    template <class F> void for_each(F&& f) const {
        for (std::uint32_t m = mask_; m; m &= m - 1) f(std::countr_zero(m));
    }

private:
    std::uint32_t mask_ = 0;
};

// lexicographic order on sorted element lists
bool lex_less(NodeSet a, NodeSet b);
struct NodeSetLess {
    bool operator()(NodeSet a, NodeSet b) const { return lex_less(a, b); }
};
void sort_sets(std::vector<NodeSet>& v);

// all subsets of s, ascending mask order
template <class F> void for_each_subset(NodeSet s, F&& f) {
    std::uint32_t m = s.mask();
    std::uint32_t sub = 0;
    while (true) {
        f(NodeSet(sub));
        if (sub == m) break;
        sub = (sub - m) & m;
    }
}

// Depth vector c: the weight lambda - sum c_i alpha_i.  Also used for signed
// root-lattice offsets when a computation leaves the cone.
using Depth = std::vector<int>;

int height(const Depth& c);
bool nonnegative(const Depth& c);
bool dominates(const Depth& a, const Depth& b);  // a >= b coordinatewise
Depth add(const Depth& a, const Depth& b);
Depth sub(const Depth& a, const Depth& b);
std::string depth_str(const Depth& c);

struct DepthHash {
    std::size_t operator()(const Depth& c) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : c) h = (h ^ static_cast<std::size_t>(v + 0x51)) * 0x100000001b3ull;
        return h;
    }
};

// all depth vectors of the given rank with height <= n, lexicographic order
std::vector<Depth> depths_up_to(int rank, int n, NodeSet support);
std::vector<Depth> depths_up_to(int rank, int n);

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hovm
