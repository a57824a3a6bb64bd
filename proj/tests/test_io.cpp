#include <doctest.h>

#include <random>

#include "hovm/io.hpp"
#include "hovm/verify.hpp"

using namespace hovm;

TEST_CASE("algebra JSON") {
    CHECK(gcm_from_json(json("A1^2")) == parse_gcm("A1^2"));
    CHECK(gcm_from_json(json{{"type", "B2"}}) == parse_gcm("B2"));
    CHECK(gcm_from_json(json{{"matrix", {{2, -1}, {-3, 2}}}}).finite_type());
    CHECK(gcm_from_json(gcm_to_json(parse_gcm("G2"))) == parse_gcm("G2"));
    CHECK_THROWS_AS(gcm_from_json(json(3)), ValidationError);
    CHECK_THROWS_AS(gcm_from_json(json{{"matrix", {{2, "a"}}}}), ValidationError);
}

TEST_CASE("weight and hole JSON") {
    Gcm g = parse_gcm("A3");
    HighestWeight l = weight_from_json(g, json::parse(R"([1,"x",-2])"));
    CHECK(l.evals[0] == 1);
    CHECK_FALSE(l.evals[1].has_value());
    CHECK(weight_to_json(l) == json::parse(R"([1,"x",-2])"));
    CHECK_THROWS_AS(weight_from_json(g, json::parse("[1,2]")), ValidationError);
    CHECK_THROWS_AS(weight_from_json(g, json::parse(R"([1,"y",2])")), ValidationError);

    auto holes = sets_from_json(g, json::parse("[[3,1],[2]]"));
    CHECK(holes == std::vector<NodeSet>{NodeSet::of({0, 2}), NodeSet::of({1})});
    CHECK(sets_to_json(holes) == json::parse("[[1,3],[2]]"));
    CHECK_THROWS_AS(sets_from_json(g, json::parse("[[4]]")), ValidationError);
    CHECK_THROWS_AS(sets_from_json(g, json::parse("[[0]]")), ValidationError);
    CHECK(depth_from_json(g, json::parse("[0,2,1]")) == Depth{0, 2, 1});
    CHECK_THROWS_AS(depth_from_json(g, json::parse("[0,-2,1]")), ValidationError);
}

TEST_CASE("randomized suites are seed deterministic") {
    for (const char* suite : {"weights", "chars", "reciprocity", "kl", "resolutions"}) {
        VerifyResult a = run_suite(suite, 42, 20);
        VerifyResult b = run_suite(suite, 42, 20);
        CHECK_MESSAGE(a.ok, suite);
        CHECK(a.trials == 20);
        CHECK(a.counterexample.dump() == b.counterexample.dump());
    }
    std::mt19937_64 r1(7), r2(7);
    for (int t = 0; t < 20; ++t)
        CHECK(random_sl2n_instance(r1, 2, 4).to_json() == random_sl2n_instance(r2, 2, 4).to_json());
    CHECK_THROWS_AS(run_suite("nope", 1, 1), ValidationError);
    CHECK(run_suite("weights", 1, 0).trials == 0);
}
