#include <doctest.h>

#include "hovm/holes.hpp"
#include "hovm/hovm.hpp"

using namespace hovm;

namespace {

std::vector<NodeSet> sets(std::initializer_list<std::initializer_list<int>> xs) {
    std::vector<NodeSet> out;
    for (auto x : xs) out.push_back(NodeSet::from_one_based(std::vector<int>(x)));
    sort_sets(out);
    return out;
}

bool hits_all(NodeSet t, const std::vector<NodeSet>& holes) {
    for (NodeSet h : holes)
        if (!t.intersects(h)) return false;
    return true;
}

// closure of the antichain in Indep(context), by brute force over subsets
std::vector<NodeSet> brute_closure(const Gcm& g, const std::vector<NodeSet>& anti, NodeSet context) {
    std::vector<NodeSet> out;
    for (NodeSet s : independent_sets(g, context, true))
        for (NodeSet h : anti)
            if (h.subset_of(s)) {
                out.push_back(s);
                break;
            }
    sort_sets(out);
    return out;
}

}  // namespace

TEST_CASE("minimalize and closure membership") {
    Gcm a4 = parse_gcm("A4");
    NodeSet j = NodeSet::of({0, 1, 2});
    CHECK(minimalize(a4, sets({{1}, {1, 3}}), j).min_holes == sets({{1}}));
    CHECK(closure_member(a4, NodeSet::of({0, 2}), minimalize(a4, sets({{1}}), j)));
    CHECK_FALSE(closure_member(a4, NodeSet(), minimalize(a4, sets({{1}}), j)));
    CHECK_THROWS_AS(minimalize(a4, sets({{1, 2}}), j), ValidationError);
    CHECK_THROWS_AS(minimalize(a4, sets({{4}}), j), ValidationError);
    CHECK(minimalize(a4, {NodeSet()}, j).zero());
}

TEST_CASE("upper closure round trip") {
    for (const char* name : {"A4", "A1^4", "D4", "B3"}) {
        Gcm g = parse_gcm(name);
        auto indep = independent_sets(g, g.all(), false);
        // every antichain drawn from pairs of independent sets
        for (std::size_t a = 0; a < indep.size(); ++a)
            for (std::size_t b = a; b < indep.size(); ++b) {
                HoleSet hs = minimalize(g, {indep[a], indep[b]}, g.all());
                auto up = upper_closure(g, hs);
                CHECK(up == brute_closure(g, hs.min_holes, g.all()));
                CHECK(minimalize(g, up, g.all()) == hs);
            }
    }
}

TEST_CASE("transversals are exactly the minimal hitting sets") {
    Gcm sl23 = parse_gcm("A1^3");
    CHECK(transversals(minimalize(sl23, sets({{1, 2}, {2, 3}, {1, 3}}), sl23.all())) == sets({{1, 2}, {1, 3}, {2, 3}}));
    Gcm a4 = parse_gcm("A4");
    CHECK(transversals(minimalize(a4, sets({{2}, {1, 3}}), NodeSet::of({0, 1, 2}))) == sets({{1, 2}, {2, 3}}));
    CHECK(transversals(minimalize(a4, sets({{3}}), a4.all())) == sets({{3}}));
    CHECK(transversals(HoleSet{{}, a4.all()}) == std::vector<NodeSet>{NodeSet()});

    Gcm sl25 = parse_gcm("A1^5");
    auto all = independent_sets(sl25, sl25.all(), false);
    for (std::size_t a = 0; a < all.size(); a += 3)
        for (std::size_t b = a + 1; b < all.size(); b += 5)
            for (std::size_t c = b + 1; c < all.size(); c += 7) {
                HoleSet hs = minimalize(sl25, {all[a], all[b], all[c]}, sl25.all());
                std::vector<NodeSet> want;
                for_each_subset(hs.support(), [&](NodeSet t) {
                    if (!hits_all(t, hs.min_holes)) return;
                    bool minimal = true;
                    t.for_each([&](int v) {
                        NodeSet smaller = t;
                        smaller.erase(v);
                        if (hits_all(smaller, hs.min_holes)) minimal = false;
                    });
                    if (minimal) want.push_back(t);
                });
                sort_sets(want);
                CHECK(transversals(hs) == want);
            }
}

TEST_CASE("admissible families") {
    Gcm sl23 = parse_gcm("A1^3");
    HoleSet one = minimalize(sl23, sets({{1, 2}}), sl23.all());
    auto k1 = admissible_sets(one, 1);
    REQUIRE(k1.families.size() == 2);
    CHECK(k1.families[0] == sets({{1}}));
    CHECK(k1.families[1] == sets({{2}}));
    HoleSet tri = minimalize(sl23, sets({{1, 2}, {2, 3}, {1, 3}}), sl23.all());
    auto inf = admissible_sets(tri, 3);
    REQUIRE(inf.families.size() == 1);
    CHECK(inf.families[0] == tri.min_holes);
    for (int k = 1; k <= 2; ++k) {
        for (const auto& fam : admissible_sets(tri, k).families) {
            for (NodeSet f : fam) {
                CHECK(f.size() <= k);
                bool inside = false;
                for (NodeSet h : tri.min_holes) inside = inside || f.subset_of(h);
                CHECK(inside);
            }
            for (NodeSet h : tri.min_holes) {
                bool refined = false;
                for (NodeSet f : fam) refined = refined || (f.subset_of(h) && f.size() == std::min(k, h.size()));
                CHECK(refined);
            }
        }
    }
}

TEST_CASE("h_prime") {
    Gcm sl22 = parse_gcm("A1^2");
    HoleSet hs = minimalize(sl22, sets({{1, 2}}), sl22.all());
    auto z = h_prime(sl22, make_weight(sl22, {0, 0}), hs);
    REQUIRE(z);
    CHECK(z->min_holes == sets({{1, 2}}));
    auto x = h_prime(sl22, make_weight(sl22, {0, std::nullopt}), hs);
    REQUIRE(x);
    CHECK(x->min_holes == sets({{1}}));
    CHECK_FALSE(h_prime(sl22, make_weight(sl22, {-2, std::nullopt}), hs));
}

TEST_CASE("order-k truncations") {
    Gcm a4 = parse_gcm("A4");
    NodeSet j = NodeSet::of({0, 1, 2});
    HoleSet hs = minimalize(a4, sets({{2}, {1, 3}}), j);
    auto [m0, l0] = order_k_truncations(a4, hs, 0, j);
    CHECK(m0.empty());
    CHECK(l0.min_holes == sets({{1}, {2}, {3}}));
    auto [m1, l1] = order_k_truncations(a4, hs, 1, j);
    CHECK(m1.min_holes == sets({{2}}));
    CHECK(l1.min_holes == sets({{1, 3}, {2}}));
    auto [m3, l3] = order_k_truncations(a4, hs, 3, j);
    CHECK(m3 == hs);
    CHECK(upper_closure(a4, l3) == upper_closure(a4, hs));
    // M_k lies below L_k
    for (int k = 0; k <= 3; ++k) {
        auto [mk, lk] = order_k_truncations(a4, hs, k, j);
        for (NodeSet h : upper_closure(a4, mk)) CHECK(closure_member(a4, h, lk));
        for (NodeSet h : upper_closure(a4, mk)) CHECK(closure_member(a4, h, hs));
    }
}

TEST_CASE("first order truncations coincide exactly when the complement is complete") {
    for (const char* name : {"A4", "A1^3", "D4", "A1xA3", "B3"}) {
        Gcm g = parse_gcm(name);
        NodeSet jl = g.all();
        for_each_subset(jl, [&](NodeSet j) {
            std::vector<NodeSet> singles;
            j.for_each([&](int v) { singles.push_back(NodeSet::of({v})); });
            HoleSet hs = minimalize(g, singles, jl);
            auto [mk, lk] = order_k_truncations(g, hs, 1, jl);
            bool complete = true;
            NodeSet rest = jl - j;
            rest.for_each([&](int a) {
                rest.for_each([&](int b) { complete = complete && (a == b || g.adjacent(a, b)); });
            });
            CHECK_MESSAGE((upper_closure(g, mk) == upper_closure(g, lk)) == complete, name << " " << j.str());
        });
    }
}
