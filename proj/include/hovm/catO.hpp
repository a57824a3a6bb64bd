#pragma once

#include <map>
#include <string>
#include <vector>

#include "hovm/hovm.hpp"
#include "hovm/oracle.hpp"

namespace hovm {

// Block of lambda over sl2^n: members K subset of K* give w_K . tilde
struct Block {
    Gcm g;
    HighestWeight lambda;
    HighestWeight tilde;  // K*-dominant representative
    NodeSet kstar;
    NodeSet moved;        // lambda = w_moved . tilde

    Depth member(NodeSet k) const;                // depth of w_K . tilde below tilde
    HighestWeight member_weight(NodeSet k) const;  // its evaluations
    int cutoff() const;                            // sum of m_i over K*, plus 4
};

Block build_block(const Gcm& g, const HighestWeight& lambda);

struct BlockHoles {
    Block block;
    HoleSet holes;                   // over all nodes
    std::vector<NodeSet> simple_index;  // K with L(w_K . tilde) in O^H
    bool in_index(NodeSet k) const;
};

BlockHoles simples_in_block(const Block& block, const std::vector<NodeSet>& holes);

HovmSpec universal_cover(const BlockHoles& bh, NodeSet k);
// character of the cover of K in the frame of tilde, from the monomial oracle
Character cover_char(const BlockHoles& bh, NodeSet k);

// [cover(K) : L(K')]
int jh_multiplicity(const BlockHoles& bh, NodeSet k, NodeSet k_prime);

struct StandardFactor {
    NodeSet member;  // K'' with mu_l = w_{K''} . tilde
    Depth weight;
    HoleSet holes;   // H'_{w_K . tilde}
};

struct ReciprocityEntry {
    NodeSet k;         // projective cover of L(w_K . tilde)
    NodeSet k_prime;   // standard / cover index
    long long lhs;     // standard filtration multiplicity, summed over hole sets
    long long rhs;     // oracle Jordan-Holder multiplicity [cover(K') : L(K)]
    long long formula; // indicator formula
};

struct ReciprocityTable {
    int cutoff = 0;
    std::vector<ReciprocityEntry> entries;
    std::map<std::uint32_t, std::vector<StandardFactor>> filtrations;  // by K mask
    bool all_equal = true;
};

ReciprocityTable reciprocity_table(const BlockHoles& bh);

// Truncated KL relations indexed by integrability sets S = K* \ K.
struct KlBases {
    std::vector<NodeSet> index;
    std::map<std::uint32_t, std::map<std::uint32_t, long long>> t_in_c;  // T_S = sum C_S'
    std::map<std::uint32_t, std::map<std::uint32_t, long long>> c_in_t;  // C_S = sum +-T_S'
    bool inverse = false;
    bool oracle_identity = false;
};

KlBases kl_bases(const BlockHoles& bh);
std::string kl_expansion_string(NodeSet s, const std::map<std::uint32_t, long long>& terms);

}  // namespace hovm
