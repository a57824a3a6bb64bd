#include "hovm/verify.hpp"

#include <algorithm>

#include "hovm/oracle.hpp"

namespace hovm {

json Instance::to_json() const {
    json holes_json = json::array();
    for (NodeSet h : holes) holes_json.push_back(set_to_json(h));
    return json{{"algebra", gcm_to_json(g)}, {"lambda", weight_to_json(lambda)}, {"holes", holes_json}};
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<NodeSet> random_antichain(std::mt19937_64& rng, NodeSet pool, int max_sets) {
    std::vector<NodeSet> sets;
    if (pool.empty()) return sets;
    int count = uniform(rng, 0, max_sets);
    for (int t = 0; t < count; ++t) {
        NodeSet s(static_cast<std::uint32_t>(uniform(rng, 1, static_cast<int>(pool.mask()))) & pool.mask());
        if (!s.empty()) sets.push_back(s);
    }
    return antichain_of(sets, pool).min_holes;
}

}  // namespace

Instance random_sl2n_instance(std::mt19937_64& rng, int n_min, int n_max) {
    int n = uniform(rng, n_min, n_max);
    Gcm g = parse_gcm("A1^" + std::to_string(n));
    HighestWeight lambda;
    for (int i = 0; i < n; ++i) {
        if (uniform(rng, 0, 4) == 0) lambda.evals.emplace_back(std::nullopt);
        else lambda.evals.emplace_back(uniform(rng, -1, 3));
    }
    return {g, lambda, random_antichain(rng, integrability(lambda), 4)};
}

Instance random_orthogonal_instance(std::mt19937_64& rng, const Gcm& g, int max_holes) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        HighestWeight lambda;
        for (int i = 0; i < g.rank(); ++i) {
            int r = uniform(rng, 0, 6);
            if (r == 0) lambda.evals.emplace_back(std::nullopt);
            else if (r == 1) lambda.evals.emplace_back(-1);
            else lambda.evals.emplace_back(uniform(rng, 0, 2));
        }
        auto indep = independent_sets(g, integrability(lambda), false);
        if (indep.empty()) continue;
        std::shuffle(indep.begin(), indep.end(), rng);
        int want = uniform(rng, 1, max_holes);
        std::vector<NodeSet> holes;
        for (NodeSet s : indep) {
            if (static_cast<int>(holes.size()) == want) break;
            bool ok = std::all_of(holes.begin(), holes.end(), [&](NodeSet h) {
                if (h.intersects(s)) return false;
                bool apart = true;
                h.for_each([&](int a) { s.for_each([&](int b) { apart = apart && !g.adjacent(a, b); }); });
                return apart;
            });
            if (ok) holes.push_back(s);
        }
        sort_sets(holes);
        return {g, lambda, holes};
    }
    throw ValidationError("could not draw an orthogonal instance");
}

Instance random_block_instance(std::mt19937_64& rng, int n_min, int n_max, int max_m) {
    int n = uniform(rng, n_min, n_max);
    Gcm g = parse_gcm("A1^" + std::to_string(n));
    HighestWeight lambda;
    for (int i = 0; i < n; ++i) {
        int r = uniform(rng, 0, 5);
        if (r == 0) lambda.evals.emplace_back(std::nullopt);
        else if (r == 1) lambda.evals.emplace_back(-1);
        else {
            int m = uniform(rng, 1, max_m);
            lambda.evals.emplace_back(uniform(rng, 0, 1) ? m - 1 : -m - 1);
        }
    }
    return {g, lambda, random_antichain(rng, g.all(), 3)};
}

namespace {

json mismatch(const Instance& inst, const std::string& what) {
    json j = inst.to_json();
    j["check"] = what;
    return j;
}

std::string check_weights(const Instance& inst, int cutoff) {
    HovmSpec spec = inst.spec();
    auto oracle = oracle_weights(oracle_module(inst.lambda, spec.holes.min_holes, cutoff));
    if (weight_set(spec, cutoff) != oracle) return "weight_set";
    if (weight_set_via_T2(spec, cutoff) != oracle) return "weight_set_via_T2";
    if (weight_set(spec, cutoff, Exec::serial) != oracle) return "weight_set_serial";
    return "";
}

std::string check_chars(const Instance& inst, int cutoff) {
    HovmSpec spec = inst.spec();
    Character oracle = oracle_char(oracle_module(inst.lambda, spec.holes.min_holes, cutoff));
    if (!(inclusion_exclusion_char(spec, cutoff) == oracle)) return "inclusion_exclusion_char";
    if (!(euler_char(spec.g, taylor_resolution(spec), cutoff) == oracle)) return "taylor_euler_char";
    return "";
}

std::string check_block(const Instance& inst, bool kl) {
    BlockHoles bh = simples_in_block(build_block(inst.g, inst.lambda), inst.holes);
    if (kl) {
        KlBases b = kl_bases(bh);
        if (!b.inverse) return "kl_inverse";
        if (!b.oracle_identity) return "kl_oracle_identity";
        return "";
    }
    return reciprocity_table(bh).all_equal ? "" : "reciprocity";
}

std::string check_resolution(const Instance& inst, int cutoff) {
    HovmSpec spec = inst.spec();
    Resolution res = koszul_resolution(spec);
    if (!verify_complex(res)) return "verify_complex";
    Character ch = euler_char(spec.g, res, cutoff);
    if (!ch.nonnegative()) return "euler_char_nonnegative";
    if (ch.support() != weight_set(spec, cutoff)) return "euler_char_support";
    if (!sign_symmetry_check(spec)) return "sign_symmetry";
    return "";
}

}  // namespace

VerifyResult run_suite(const std::string& suite, std::uint64_t seed, int trials) {
    static const std::vector<std::string> known{"weights", "chars", "reciprocity", "kl", "resolutions"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw ValidationError("unknown verification suite: " + suite);
    if (trials < 0) throw ValidationError("trial count must be nonnegative");
    std::mt19937_64 rng(seed);
    VerifyResult out;
    const Gcm a3 = parse_gcm("A3"), b3 = parse_gcm("B3");
    for (int t = 0; t < trials; ++t) {
        Instance inst;
        std::string bad;
        if (suite == "weights" || suite == "chars") {
            inst = random_sl2n_instance(rng, 2, 4);
            bad = suite == "weights" ? check_weights(inst, 10) : check_chars(inst, 10);
        } else if (suite == "reciprocity" || suite == "kl") {
            inst = random_block_instance(rng, 1, 3, 3);
            bad = check_block(inst, suite == "kl");
        } else {
            inst = random_orthogonal_instance(rng, t % 2 ? b3 : a3, 2);
            bad = check_resolution(inst, 8);
        }
        ++out.trials;
        if (!bad.empty()) {
            out.ok = false;
            out.counterexample = mismatch(inst, bad);
            return out;
        }
    }
    return out;
}

}  // namespace hovm
