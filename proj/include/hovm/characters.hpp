#pragma once

#include <map>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "hovm/core.hpp"
#include "hovm/parallel.hpp"
#include "hovm/rootdata.hpp"
#include "hovm/weights.hpp"

namespace hovm {

// Truncated formal character in the frame of a fixed highest weight:
// key c stands for e^{lambda - sum c_i alpha_i}.  Exact on heights <= cutoff.
class Character {
public:
    Character() = default;
    Character(int rank, int cutoff) : rank_(rank), cutoff_(cutoff) {}

    int rank() const { return rank_; }
    int cutoff() const { return cutoff_; }
    const std::map<Depth, long long>& terms() const { return terms_; }
    long long coeff(const Depth& c) const;
    void add_term(const Depth& c, long long v);  // ignores keys above the cutoff

    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character scaled(long long k) const;
    Character shift_by(const Depth& d) const;  // multiply by e^{-d}
    Character truncated(int cutoff) const;
    std::vector<Depth> support() const;
    bool nonnegative() const;
    bool zero_one() const;
    bool operator==(const Character& o) const { return cutoff_ == o.cutoff_ && terms_ == o.terms_; }

private:
    int rank_ = 0;
    int cutoff_ = 0;
    std::map<Depth, long long> terms_;
};

// Number of multisets of the given roots summing to beta; memo is shared across
// threads with reader/writer locking.
class PartitionCounter {
public:
    explicit PartitionCounter(std::vector<Depth> roots);
    long long count(const Depth& beta) const;
    const std::vector<Depth>& roots() const { return roots_; }

private:
    long long rec(const Depth& beta, std::size_t i) const;

    std::vector<Depth> roots_;  // descending height; simple roots last
    std::size_t simple_start_ = 0;
    NodeSet simple_mask_;
    mutable std::shared_mutex mu_;
    mutable std::vector<std::unordered_map<Depth, long long, DepthHash>> memo_;
};

// registry keyed by (Cartan matrix, root support)
const PartitionCounter& partition_counter(const Gcm& g, NodeSet support);
long long kostant_partition(const Gcm& g, const Depth& beta);

struct OrbitTerm {
    Depth depth;  // w . lambda = lambda - depth
    int length;
};

// W_J . lambda for J-dominant-integral lambda, with lengths (breadth-first)
std::vector<OrbitTerm> dot_orbit(const Gcm& g, const HighestWeight& lambda, NodeSet j, std::size_t cap = 1000000);

Character verma_char(const Gcm& g, int cutoff, Exec ex = Exec::parallel);
Character parabolic_verma_char(const Gcm& g, const HighestWeight& lambda, NodeSet j, int cutoff,
                               Exec ex = Exec::parallel);
// character of the finite-dimensional Levi module L_J(nu), keys supported on J
Character simple_finite_char(const Gcm& g, const HighestWeight& nu, NodeSet j, int cutoff,
                             Exec ex = Exec::parallel);

}  // namespace hovm
