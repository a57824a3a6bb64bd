#pragma once

#include <cstdint>
#include <vector>

#include "hovm/core.hpp"
#include "hovm/rootdata.hpp"
#include "hovm/weights.hpp"

namespace hovm {

// Linear action on the root lattice; column j is the image of alpha_j.
class WeylElement {
public:
    static WeylElement identity(int n);
    static WeylElement simple_reflection(const Gcm& g, int i);

    int rank() const { return n_; }
    long long at(int row, int col) const { return m_[static_cast<std::size_t>(row * n_ + col)]; }
    WeylElement operator*(const WeylElement& o) const;  // (this o)(x) = this(o(x))
    bool operator==(const WeylElement& o) const = default;
    bool is_identity() const;
    std::vector<long long> apply(const std::vector<long long>& x) const;

private:
    int n_ = 0;
    std::vector<long long> m_;
};

WeylElement hole_reflection(const Gcm& g, NodeSet h);

// order by repeated composition; throws if `cap` is exceeded
long long order(const WeylElement& w, long long cap = 100000);

enum class OrderMethod { lcm_formula, direct };

// order of s_{H_1} s_{H_2} ... s_{H_k} for pairwise disjoint independent subsets
long long order_of_hole_product(const Gcm& g, const std::vector<NodeSet>& holes, OrderMethod method);

// parabolic Weyl semigroup on an ordered hole list H_1..H_k
struct SemigroupElement {
    std::uint32_t index = 0;  // bit t set <=> H_{t+1} in J
    SemigroupElement operator*(SemigroupElement o) const { return {index | o.index}; }
    int length() const { return std::popcount(index); }
    bool operator==(const SemigroupElement&) const = default;
};

std::vector<SemigroupElement> semigroup(std::size_t k);

NodeSet union_of(const std::vector<NodeSet>& holes, std::uint32_t index);

// w_J .' lambda_{H_K} = lambda_{H_{J u K}}
Depth semigroup_act(const Gcm& g, const HighestWeight& lambda, const std::vector<NodeSet>& holes,
                    SemigroupElement w, SemigroupElement on);

}  // namespace hovm
