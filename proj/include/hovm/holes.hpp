#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hovm/core.hpp"
#include "hovm/rootdata.hpp"
#include "hovm/weights.hpp"

namespace hovm {

// Antichain of minimal holes inside `context`; represents its upper closure in Indep(context).
struct HoleSet {
    std::vector<NodeSet> min_holes;
    NodeSet context;

    bool zero() const;  // the empty set is a hole: the module vanishes
    bool empty() const { return min_holes.empty(); }
    NodeSet support() const;
    bool operator==(const HoleSet&) const = default;
};

class ZeroModuleError : public ValidationError {
public:
    ZeroModuleError() : ValidationError("the empty set is a hole: the module is zero") {}
};

// inclusion-minimal elements, sorted; validates independence and containment in context
HoleSet minimalize(const Gcm& g, const std::vector<NodeSet>& sets, NodeSet context);
// no validation
HoleSet antichain_of(std::vector<NodeSet> sets, NodeSet context);

bool closure_member(const Gcm& g, NodeSet h, const HoleSet& hs);
// every independent subset of the context in the upper closure (bounded use only)
std::vector<NodeSet> upper_closure(const Gcm& g, const HoleSet& hs);

// inclusion-minimal hitting sets of the minimal holes, sorted
std::vector<NodeSet> transversals(const HoleSet& hs, std::size_t cap = 10000);

struct AdmissibleFamilies {
    std::vector<std::vector<NodeSet>> families;
    bool truncated = false;
};
// choose H'_t inside each H_t with |H'_t| = min(k, |H_t|); distinct families in order
AdmissibleFamilies admissible_sets(const HoleSet& hs, int k, std::size_t cap = 100000);

// minimalize({J_lambda n H}); nullopt when some intersection is empty
std::optional<HoleSet> h_prime(const Gcm& g, const HighestWeight& lambda, const HoleSet& hs);

// (M_k, L_k) hole sets
std::pair<HoleSet, HoleSet> order_k_truncations(const Gcm& g, const HoleSet& hs, int k, NodeSet j_lambda);

}  // namespace hovm
