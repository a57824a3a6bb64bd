#include "hovm/holes.hpp"

#include <algorithm>
#include <set>

namespace hovm {

bool HoleSet::zero() const {
    return std::any_of(min_holes.begin(), min_holes.end(), [](NodeSet h) { return h.empty(); });
}

NodeSet HoleSet::support() const {
    NodeSet s;
    for (NodeSet h : min_holes) s = s | h;
    return s;
}

HoleSet antichain_of(std::vector<NodeSet> sets, NodeSet context) {
    sort_sets(sets);
    std::vector<NodeSet> keep;
    for (NodeSet h : sets) {
        bool minimal = std::none_of(sets.begin(), sets.end(), [&](NodeSet o) { return o != h && o.subset_of(h); });
        if (minimal) keep.push_back(h);
    }
    return HoleSet{std::move(keep), context};
}

HoleSet minimalize(const Gcm& g, const std::vector<NodeSet>& sets, NodeSet context) {
    for (NodeSet h : sets) {
        if (!h.subset_of(context)) throw ValidationError("hole " + h.str() + " is not inside " + context.str());
        if (!g.independent(h)) throw ValidationError("hole " + h.str() + " is not independent");
    }
    return antichain_of(sets, context);
}

bool closure_member(const Gcm& g, NodeSet h, const HoleSet& hs) {
    if (!h.subset_of(hs.context) || !g.independent(h)) return false;
    return std::any_of(hs.min_holes.begin(), hs.min_holes.end(), [&](NodeSet m) { return m.subset_of(h); });
}

std::vector<NodeSet> upper_closure(const Gcm& g, const HoleSet& hs) {
    if (hs.context.size() > 20) throw ValidationError("upper closure over more than 20 nodes");
    std::vector<NodeSet> out;
    for_each_subset(hs.context, [&](NodeSet s) {
        if (closure_member(g, s, hs)) out.push_back(s);
    });
    sort_sets(out);
    return out;
}

namespace {

struct TransversalSearch {
    const std::vector<NodeSet>& holes;
    std::size_t cap;
    std::set<NodeSet, NodeSetLess> found;

    bool has_private(NodeSet cur, int v) const {
        for (NodeSet h : holes)
            if ((h & cur) == NodeSet::of({v})) return true;
        return false;
    }

    bool minimal(NodeSet cur) const {
        bool ok = true;
        cur.for_each([&](int v) { ok = ok && has_private(cur, v); });
        return ok;
    }

    void run(NodeSet cur, NodeSet excluded) {
        const NodeSet* open = nullptr;
        for (const NodeSet& h : holes)
            if (!h.intersects(cur)) {
                open = &h;
                break;
            }
        if (!open) {
            if (minimal(cur)) {
                found.insert(cur);
                if (found.size() > cap) throw ValidationError("transversal count exceeds cap");
            }
            return;
        }
        NodeSet excl = excluded;
        for (int v : open->elements()) {
            if (excl.contains(v)) continue;
            NodeSet next = cur | NodeSet::of({v});
            bool dominated = std::any_of(found.begin(), found.end(), [&](NodeSet t) { return t.subset_of(next); });
            if (!dominated && minimal(next)) run(next, excl);
            excl.insert(v);
        }
    }
};

}  // namespace

std::vector<NodeSet> transversals(const HoleSet& hs, std::size_t cap) {
    if (hs.zero()) throw ZeroModuleError();
    TransversalSearch search{hs.min_holes, cap, {}};
    search.run(NodeSet(), NodeSet());
    return {search.found.begin(), search.found.end()};
}

namespace {

std::vector<NodeSet> subsets_of_size(NodeSet h, int k) {
    std::vector<NodeSet> out;
    for_each_subset(h, [&](NodeSet s) {
        if (s.size() == k) out.push_back(s);
    });
    sort_sets(out);
    return out;
}

struct FamilyLess {
    bool operator()(const std::vector<NodeSet>& a, const std::vector<NodeSet>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), NodeSetLess{});
    }
};

}  // namespace

AdmissibleFamilies admissible_sets(const HoleSet& hs, int k, std::size_t cap) {
    if (k < 1) throw ValidationError("admissible order must be at least 1");
    std::vector<std::vector<NodeSet>> choices;
    for (NodeSet h : hs.min_holes) choices.push_back(subsets_of_size(h, std::min(k, h.size())));
    AdmissibleFamilies out;
    std::set<std::vector<NodeSet>, FamilyLess> seen;
    std::vector<std::size_t> pos(choices.size(), 0);
    while (true) {
        std::vector<NodeSet> fam;
        for (std::size_t t = 0; t < choices.size(); ++t) fam.push_back(choices[t][pos[t]]);
        sort_sets(fam);
        if (seen.insert(fam).second) {
            if (seen.size() > cap) {
                out.truncated = true;
                break;
            }
            out.families.push_back(std::move(fam));
        }
        std::size_t t = 0;
        while (t < pos.size() && ++pos[t] == choices[t].size()) pos[t++] = 0;
        if (t == pos.size()) break;
    }
    return out;
}

std::optional<HoleSet> h_prime(const Gcm& g, const HighestWeight& lambda, const HoleSet& hs) {
    NodeSet j = integrability(lambda);
    std::vector<NodeSet> cut;
    for (NodeSet h : hs.min_holes) {
        NodeSet x = h & j;
        if (x.empty()) return std::nullopt;
        cut.push_back(x);
    }
    return minimalize(g, cut, j);
}

std::pair<HoleSet, HoleSet> order_k_truncations(const Gcm& g, const HoleSet& hs, int k, NodeSet j_lambda) {
    if (k < 0) throw ValidationError("truncation order must be nonnegative");
    std::vector<NodeSet> small;
    for (NodeSet h : hs.min_holes)
        if (h.size() <= k) small.push_back(h);
    HoleSet mk = antichain_of(small, j_lambda);
    std::vector<NodeSet> lower = small;
    for (NodeSet s : independent_sets(g, j_lambda, false)) {
        if (s.size() != k + 1) continue;
        bool contains = std::any_of(small.begin(), small.end(), [&](NodeSet h) { return h.subset_of(s); });
        if (!contains) lower.push_back(s);
    }
    return {mk, antichain_of(lower, j_lambda)};
}

}  // namespace hovm
