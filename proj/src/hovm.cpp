#include "hovm/hovm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hovm/oracle.hpp"

namespace hovm {

HovmSpec make_spec(const Gcm& g, HighestWeight lambda, const std::vector<NodeSet>& holes) {
    if (lambda.rank() != g.rank()) throw ValidationError("lambda length does not match the rank");
    NodeSet j = integrability(lambda);
    HoleSet hs = minimalize(g, holes, j);
    return HovmSpec{g, std::move(lambda), std::move(hs)};
}

namespace {

// c is a weight of M(lambda, J); J inside J_lambda, finite type
bool slice_member(const Gcm& g, const HighestWeight& lambda, const std::vector<int>& nodes, const Depth& c) {
    const int n = g.rank();
    long long e[32];
    long long d[32];
    for (int j : nodes) {
        long long v = *lambda.evals[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) v -= static_cast<long long>(g(j, i)) * c[static_cast<std::size_t>(i)];
        e[j] = v;
        d[j] = c[static_cast<std::size_t>(j)];
    }
    for (std::size_t guard = 0; guard < 10000000; ++guard) {
        int pick = -1;
        for (int j : nodes)
            if (e[j] < 0) {
                pick = j;
                break;
            }
        if (pick < 0) return true;
        long long ep = e[pick];
        d[pick] += ep;
        if (d[pick] < 0) return false;
        for (int i : nodes) e[i] -= ep * g(i, pick);
    }
    throw ValidationError("dominant conjugate did not terminate");
}

NodeSet union_of_sets(const std::vector<NodeSet>& sets, std::uint32_t index) {
    NodeSet u;
    for (std::size_t t = 0; t < sets.size(); ++t)
        if ((index >> t) & 1u) u = u | sets[t];
    return u;
}

void check_pvm(const Gcm& g, const HighestWeight& lambda, NodeSet j) {
    if (!j.subset_of(integrability(lambda))) throw ValidationError("J = " + j.str() + " is not inside J_lambda");
    if (!g.finite_type_on(j)) throw ValidationError("J = " + j.str() + " spans an infinite-type subdiagram");
}

std::vector<Depth> filter(const std::vector<Depth>& keys, Exec ex, const auto& pred) {
    std::vector<char> keep(keys.size(), 0);
    parallel_for(keys.size(), ex, [&](std::size_t k) { keep[k] = pred(keys[k]) ? 1 : 0; });
    std::vector<Depth> out;
    for (std::size_t k = 0; k < keys.size(); ++k)
        if (keep[k]) out.push_back(keys[k]);
    return out;
}

}  // namespace

bool pvm_member(const Gcm& g, const HighestWeight& lambda, NodeSet j, const Depth& c) {
    check_pvm(g, lambda, j);
    if (static_cast<int>(c.size()) != g.rank() || !nonnegative(c)) throw ValidationError("invalid depth vector");
    return slice_member(g, lambda, j.elements(), c);
}

MembershipTest::MembershipTest(const HovmSpec& spec) : spec_(&spec) {
    zero_ = spec.zero();
    if (zero_) return;
    trans_ = transversals(spec.holes);
    for (NodeSet t : trans_) {
        check_pvm(spec.g, spec.lambda, t);
        nodes_.push_back(t.elements());
    }
}

bool MembershipTest::operator()(const Depth& c) const {
    if (zero_) return false;
    for (const auto& nodes : nodes_)
        if (slice_member(spec_->g, spec_->lambda, nodes, c)) return true;
    return false;
}

bool weight_member(const HovmSpec& spec, const Depth& c) {
    if (static_cast<int>(c.size()) != spec.g.rank() || !nonnegative(c)) throw ValidationError("invalid depth vector");
    return MembershipTest(spec)(c);
}

std::vector<Depth> weight_set(const HovmSpec& spec, int cutoff, Exec ex) {
    MembershipTest test(spec);
    return filter(depths_up_to(spec.g.rank(), cutoff), ex, test);
}

std::vector<Depth> pvm_weight_set(const Gcm& g, const HighestWeight& lambda, NodeSet j, int cutoff, Exec ex) {
    check_pvm(g, lambda, j);
    auto nodes = j.elements();
    return filter(depths_up_to(g.rank(), cutoff), ex,
                  [&](const Depth& c) { return slice_member(g, lambda, nodes, c); });
}

std::vector<Depth> minkowski_sum(const std::vector<Depth>& a, const std::vector<Depth>& b, int cutoff) {
    std::set<Depth> out;
    for (const auto& x : a) {
        int hx = height(x);
        if (hx > cutoff) continue;
        for (const auto& y : b)
            if (hx + height(y) <= cutoff) out.insert(add(x, y));
    }
    return {out.begin(), out.end()};
}

std::vector<Depth> weight_set_via_T2(const HovmSpec& spec, int cutoff, Exec ex) {
    if (spec.zero()) return {};
    NodeSet j = integrability(spec.lambda);
    auto top = simple_finite_char(spec.g, spec.lambda, j, cutoff, ex).support();
    HighestWeight origin{std::vector<CartanEval>(static_cast<std::size_t>(spec.g.rank()), 0)};
    HovmSpec frame = make_spec(spec.g, origin, spec.holes.min_holes);
    auto base = weight_set(frame, cutoff, ex);
    return minkowski_sum(top, base, cutoff);
}

bool minkowski_family_check(const Gcm& g, const HighestWeight& lambda, NodeSet j, NodeSet j_prime, int cutoff) {
    if (!j.subset_of(j_prime) || !j_prime.subset_of(integrability(lambda)))
        throw ValidationError("need J inside J' inside J_lambda");
    auto lhs = pvm_weight_set(g, lambda, j, cutoff);
    std::vector<Depth> outside;
    for (const auto& r : positive_roots(g).positive_roots) {
        bool in_j = true;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] && !j.contains(static_cast<int>(i))) in_j = false;
        if (!in_j) outside.push_back(r);
    }
    std::set<Depth> reach;
    std::vector<Depth> frontier;
    for (const auto& c : simple_finite_char(g, lambda, j_prime, cutoff).support())
        if (reach.insert(c).second) frontier.push_back(c);
    while (!frontier.empty()) {
        std::vector<Depth> next;
        for (const auto& c : frontier)
            for (const auto& r : outside) {
                Depth s = add(c, r);
                if (height(s) <= cutoff && reach.insert(s).second) next.push_back(s);
            }
        frontier.swap(next);
    }
    return std::vector<Depth>(reach.begin(), reach.end()) == lhs;
}

int infinite_order(const HovmSpec& spec) { return std::max(1, integrability(spec.lambda).size()); }

std::vector<Depth> psi_k(const HovmSpec& spec, int k, int cutoff, Exec ex) {
    if (spec.zero()) return {};
    auto fams = admissible_sets(spec.holes, k);
    if (fams.truncated) throw ValidationError("admissible family count exceeds cap");
    std::vector<HovmSpec> specs;
    for (const auto& f : fams.families)
        specs.push_back(HovmSpec{spec.g, spec.lambda, antichain_of(f, spec.holes.context)});
    std::vector<MembershipTest> tests;
    for (const auto& s : specs) tests.emplace_back(s);
    return filter(depths_up_to(spec.g.rank(), cutoff), ex, [&](const Depth& c) {
        return std::any_of(tests.begin(), tests.end(), [&](const MembershipTest& t) { return t(c); });
    });
}

SeparatingWitness psi_separating_weight(const Gcm& g, const HighestWeight& lambda, const HoleSet& first,
                                        const HoleSet& second) {
    if (first.zero() || second.zero()) throw ValidationError("hole sets must not contain the empty set");
    std::vector<std::pair<NodeSet, int>> cands;
    for (NodeSet h : first.min_holes)
        if (!closure_member(g, h, second)) cands.emplace_back(h, 1);
    for (NodeSet h : second.min_holes)
        if (!closure_member(g, h, first)) cands.emplace_back(h, 2);
    if (cands.empty()) throw ValidationError("hole sets have identical upper closures");
    auto best = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return lex_less(a.first, b.first);
        return a.second < b.second;
    });
    return {best->first, lambda_H(g, lambda, best->first), best->second};
}

std::vector<Depth> altwts_set(const HovmSpec& spec, int cutoff) {
    const Gcm& g = spec.g;
    NodeSet j = integrability(spec.lambda);
    Depth zero(static_cast<std::size_t>(g.rank()), 0);
    std::set<Depth> out;
    for_each_subset(j, [&](NodeSet k) {
        Depth mu = longest_dot(g, spec.lambda, zero, j - k);
        NodeSet jmu = integrability(shifted(g, spec.lambda, mu));
        if ((jmu & j) != k) throw ValidationError("longest element conjugate has unexpected integrability");
        bool simple_in = std::all_of(spec.holes.min_holes.begin(), spec.holes.min_holes.end(),
                                     [&](NodeSet h) { return jmu.intersects(h); });
        if (!simple_in) return;
        for (auto& c : pvm_weight_set(g, spec.lambda, k, cutoff)) out.insert(std::move(c));
    });
    return {out.begin(), out.end()};
}

bool altwts_check(const HovmSpec& spec, int cutoff) { return altwts_set(spec, cutoff) == weight_set(spec, cutoff); }

Character union_char(const HovmSpec& spec, int cutoff, Exec ex) {
    if (!is_sl2n(spec.g)) throw ValidationError("union character is defined over sl2^n only");
    Character ch(spec.g.rank(), cutoff);
    for (const auto& c : weight_set(spec, cutoff, ex)) ch.add_term(c, 1);
    return ch;
}

Character inclusion_exclusion_char(const HovmSpec& spec, int cutoff, Exec ex) {
    if (!is_sl2n(spec.g)) throw ValidationError("inclusion-exclusion character is defined over sl2^n only");
    Character ch(spec.g.rank(), cutoff);
    if (spec.zero()) return ch;
    auto trans = transversals(spec.holes);
    if (trans.size() > 20) throw ValidationError("inclusion-exclusion over more than 20 transversals");
    std::map<std::uint32_t, Character> cache;
    for (std::uint32_t s = 1; s < (1u << trans.size()); ++s) {
        NodeSet u = union_of_sets(trans, s);
        auto it = cache.find(u.mask());
        if (it == cache.end()) it = cache.emplace(u.mask(), parabolic_verma_char(spec.g, spec.lambda, u, cutoff, ex)).first;
        ch = ch + (std::popcount(s) % 2 ? it->second : it->second.scaled(-1));
    }
    return ch;
}

}  // namespace hovm
