#pragma once

#include <vector>

#include "hovm/characters.hpp"
#include "hovm/core.hpp"
#include "hovm/holes.hpp"
#include "hovm/parallel.hpp"
#include "hovm/rootdata.hpp"
#include "hovm/weights.hpp"

namespace hovm {

// M(lambda, H): holes are minimal, independent and inside J_lambda
struct HovmSpec {
    Gcm g;
    HighestWeight lambda;
    HoleSet holes;

    bool zero() const { return holes.zero(); }
};

HovmSpec make_spec(const Gcm& g, HighestWeight lambda, const std::vector<NodeSet>& holes);

// weight test for the parabolic Verma module M(lambda, J)
bool pvm_member(const Gcm& g, const HighestWeight& lambda, NodeSet j, const Depth& c);

// membership in wt M(lambda, H) with transversals computed once
class MembershipTest {
public:
    explicit MembershipTest(const HovmSpec& spec);
    bool operator()(const Depth& c) const;
    const std::vector<NodeSet>& transversal_list() const { return trans_; }

private:
    const HovmSpec* spec_;
    bool zero_ = false;
    std::vector<NodeSet> trans_;
    std::vector<std::vector<int>> nodes_;
};

bool weight_member(const HovmSpec& spec, const Depth& c);

// enumerate heights <= cutoff and filter; lexicographic order
std::vector<Depth> weight_set(const HovmSpec& spec, int cutoff, Exec ex = Exec::parallel);
std::vector<Depth> pvm_weight_set(const Gcm& g, const HighestWeight& lambda, NodeSet j, int cutoff,
                                  Exec ex = Exec::parallel);

// wt L_{J_lambda}^max(lambda) + wt M(0, H), truncated
std::vector<Depth> weight_set_via_T2(const HovmSpec& spec, int cutoff, Exec ex = Exec::parallel);

// wt M(lambda, J) = wt L_{J'}^max(lambda) - Z>=0 (positive roots outside Delta_J)
bool minkowski_family_check(const Gcm& g, const HighestWeight& lambda, NodeSet j, NodeSet j_prime, int cutoff);

// union of wt M(lambda, F) over admissible families F of order k
std::vector<Depth> psi_k(const HovmSpec& spec, int k, int cutoff, Exec ex = Exec::parallel);
int infinite_order(const HovmSpec& spec);

struct SeparatingWitness {
    NodeSet hole;
    Depth weight;
    int side;  // 1: hole of the first closure only, 2: of the second only
};
SeparatingWitness psi_separating_weight(const Gcm& g, const HighestWeight& lambda, const HoleSet& first,
                                        const HoleSet& second);

// union of wt M(lambda, K) over K with L(w_{J_lambda \ K} . lambda) in O^H
std::vector<Depth> altwts_set(const HovmSpec& spec, int cutoff);
bool altwts_check(const HovmSpec& spec, int cutoff);

// sl2^n characters: indicator of the weight set, and the inclusion-exclusion
// sum over transversal unions of parabolic Verma characters
Character union_char(const HovmSpec& spec, int cutoff, Exec ex = Exec::parallel);
Character inclusion_exclusion_char(const HovmSpec& spec, int cutoff, Exec ex = Exec::parallel);

std::vector<Depth> minkowski_sum(const std::vector<Depth>& a, const std::vector<Depth>& b, int cutoff);

}  // namespace hovm
