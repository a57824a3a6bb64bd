#include <doctest.h>

#include <random>
#include <set>

#include "hovm/oracle.hpp"
#include "hovm/verify.hpp"

using namespace hovm;

TEST_CASE("monomial modules") {
    Gcm sl22 = parse_gcm("A1^2");
    MonomialModule v00 = oracle_module(make_weight(sl22, {0, 0}), {NodeSet::of({0, 1})}, 6);
    CHECK(v00.generators == std::vector<Depth>{{1, 1}});
    for (const auto& c : oracle_weights(v00)) CHECK(c[0] * c[1] == 0);
    CHECK(oracle_weights(oracle_module(make_weight(sl22, {0, 0}), {}, 6)) == depths_up_to(2, 6));

    Gcm sl23 = parse_gcm("A1^3");
    MonomialModule m = oracle_module(make_weight(sl23, {1, 0, 0}), {NodeSet::of({0, 1}), NodeSet::of({2})}, 6);
    std::set<Depth> gens(m.generators.begin(), m.generators.end());
    CHECK(gens == std::set<Depth>{{2, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(oracle_module(make_weight(sl23, {1, -1, 0}), {NodeSet::of({1})}, 4), ValidationError);
}

TEST_CASE("hole recovery from generators") {
    Gcm sl22 = parse_gcm("A1^2");
    MonomialModule m{make_weight(sl22, {0, 0}), {{1, 1}}, 6};
    CHECK(oracle_holes(m).min_holes == std::vector<NodeSet>{NodeSet::of({0, 1})});
    MonomialModule bad{make_weight(sl22, {0, 0}), {{2, 1}}, 6};
    CHECK_THROWS_AS(oracle_holes(bad), ValidationError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Instance inst = random_sl2n_instance(rng, 2, 4);
        HovmSpec spec = inst.spec();
        CHECK(oracle_holes(oracle_module(inst.lambda, spec.holes.min_holes, 8)).min_holes == spec.holes.min_holes);
    }
}

TEST_CASE("composition factors by peeling") {
    Gcm sl22 = parse_gcm("A1^2");
    auto jh = oracle_jh(oracle_module(make_weight(sl22, {0, 0}), {NodeSet::of({0, 1})}, 8));
    CHECK(jh == std::vector<JhTerm>{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});

    Gcm a1 = parse_gcm("A1");
    auto verma = oracle_jh(oracle_module(make_weight(a1, {1}), {}, 8));
    CHECK(verma == std::vector<JhTerm>{{{0}, 1}, {{2}, 1}});

    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        Instance inst = random_sl2n_instance(rng, 3, 3);
        MonomialModule m = oracle_module(inst.lambda, inst.spec().holes.min_holes, 9);
        Character ch = oracle_char(m);
        Character rebuilt(3, 9);
        for (const auto& term : oracle_jh(m)) {
            CHECK(term.mult >= 0);
            rebuilt = rebuilt + sl2n_simple_char(inst.lambda, term.weight, 9).scaled(term.mult);
        }
        CHECK(rebuilt == ch);
    }
}
