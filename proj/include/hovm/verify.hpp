#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hovm/io.hpp"

namespace hovm {

struct Instance {
    Gcm g;
    HighestWeight lambda;
    std::vector<NodeSet> holes;
    HovmSpec spec() const { return make_spec(g, lambda, holes); }
    json to_json() const;
};

// lambda evals in [-1, 3] or non-integral; random antichain inside J_lambda
Instance random_sl2n_instance(std::mt19937_64& rng, int n_min, int n_max);
// finite type g, pairwise orthogonal nonempty holes inside J_lambda (at least one)
Instance random_orthogonal_instance(std::mt19937_64& rng, const Gcm& g, int max_holes);
// lambda over sl2^n with every K* coordinate m_i <= max_m, holes over all nodes
Instance random_block_instance(std::mt19937_64& rng, int n_min, int n_max, int max_m);

struct VerifyResult {
    bool ok = true;
    int trials = 0;
    json counterexample;
};

VerifyResult run_suite(const std::string& suite, std::uint64_t seed, int trials);

}  // namespace hovm
