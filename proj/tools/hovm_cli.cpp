#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hovm/catO.hpp"
#include "hovm/io.hpp"
#include "hovm/resolutions.hpp"
#include "hovm/verify.hpp"
#include "hovm/weyl.hpp"

using namespace hovm;

namespace {

constexpr int kDefaultHeight = 10;
constexpr int kHeightCap = 30;

struct Options {
    std::string input;
    int threads = 0;
    bool allow_large = false;
    std::string method = "union";
    std::string weights_method = "transversal";
    std::string setting = "koszul";
    std::string side = "upper";
    std::string suite = "weights";
    int k = 1;
    std::uint64_t seed = 0;
    int trials = 100;
};

class Mismatch : public std::runtime_error {
public:
    Mismatch(const std::string& what, json dump) : std::runtime_error(what), dump_(std::move(dump)) {}
    const json& dump() const { return dump_; }

private:
    json dump_;
};

json read_input(const Options& o) {
    std::string text;
    if (o.input.empty() || o.input == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(o.input);
        if (!f) throw ValidationError("cannot open input file " + o.input);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        json j = json::parse(text);
        if (!j.is_object()) throw ValidationError("input must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON input: ") + e.what());
    }
}

const json& field(const json& in, const char* name) {
    if (!in.contains(name)) throw ValidationError(std::string("missing field \"") + name + "\"");
    return in.at(name);
}

int height_of(const json& in, const Options& o) {
    int n = kDefaultHeight;
    if (in.contains("height")) {
        if (!in["height"].is_number_integer()) throw ValidationError("height must be an integer");
        n = in["height"].get<int>();
    }
    if (n < 0) throw ValidationError("height must be nonnegative");
    if (n > kHeightCap && !o.allow_large)
        throw ValidationError("height above " + std::to_string(kHeightCap) + " needs --allow-large-height");
    return n;
}

struct Job {
    Gcm g;
    HighestWeight lambda;
    std::vector<NodeSet> holes;
    int height;
};

Job job_of(const json& in, const Options& o, bool need_lambda = true) {
    Job j;
    j.g = gcm_from_json(field(in, "algebra"));
    if (need_lambda) j.lambda = weight_from_json(j.g, field(in, "lambda"));
    j.holes = in.contains("holes") ? sets_from_json(j.g, in["holes"]) : std::vector<NodeSet>{};
    j.height = height_of(in, o);
    return j;
}

void need_finite(const Gcm& g) {
    if (!g.finite_type()) throw ValidationError("this command needs a finite-type algebra");
    if (g.rank() > 8) throw ValidationError("Weyl group features are limited to rank 8");
}

json weights_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    HovmSpec spec = make_spec(j.g, j.lambda, j.holes);
    std::vector<Depth> ws;
    if (o.weights_method == "transversal") {
        ws = weight_set(spec, j.height);
    } else if (o.weights_method == "minkowski") {
        need_finite(j.g);
        ws = weight_set_via_T2(spec, j.height);
    } else if (o.weights_method == "psi") {
        ws = psi_k(spec, o.k, j.height);
    } else if (o.weights_method == "altwts") {
        need_finite(j.g);
        ws = altwts_set(spec, j.height);
    } else {
        throw ValidationError("unknown weights method " + o.weights_method);
    }
    return json{{"cutoff", j.height},
                {"count", ws.size()},
                {"holes", sets_to_json(spec.holes.min_holes)},
                {"integrability", set_to_json(integrability(spec.lambda))},
                {"weights", depths_to_json(ws)}};
}

json member_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    HovmSpec spec = make_spec(j.g, j.lambda, j.holes);
    Depth c = depth_from_json(j.g, field(in, "depth"));
    return json{{"member", weight_member(spec, c)}};
}

json char_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    need_finite(j.g);
    HovmSpec spec = make_spec(j.g, j.lambda, j.holes);
    if (o.method == "union") return character_to_json(union_char(spec, j.height));
    if (o.method == "inclusion-exclusion") return character_to_json(inclusion_exclusion_char(spec, j.height));
    if (o.method == "koszul") return character_to_json(euler_char(j.g, koszul_resolution(spec), j.height));
    if (o.method == "taylor") return character_to_json(euler_char(j.g, taylor_resolution(spec), j.height));
    throw ValidationError("unknown character method " + o.method);
}

json resolution_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    need_finite(j.g);
    HovmSpec spec = make_spec(j.g, j.lambda, j.holes);
    if (o.setting == "dihedral") {
        if (spec.holes.min_holes.size() != 2) throw ValidationError("dihedral setting needs exactly two holes");
        auto cand = dihedral_candidate(j.g, j.lambda, spec.holes.min_holes[0], spec.holes.min_holes[1], j.height);
        json els = json::array();
        for (const auto& e : cand.elements)
            els.push_back(json{{"word", e.word}, {"length", e.word.size()}, {"depth", e.weight}});
        return json{{"setting", "dihedral"},
                    {"experimental", true},
                    {"holes", sets_to_json(spec.holes.min_holes)},
                    {"order", cand.order},
                    {"elements", els},
                    {"euler_nonnegative", cand.nonnegative},
                    {"support_matches_weights", cand.support_matches}};
    }
    Resolution res;
    if (o.setting == "koszul") res = koszul_resolution(spec);
    else if (o.setting == "taylor") res = taylor_resolution(spec);
    else throw ValidationError("unknown resolution setting " + o.setting);
    auto rep = verify_complex_report(res);
    if (!rep.ok) throw Mismatch(rep.failure, resolution_to_json(res, j.g));
    json out = resolution_to_json(res, j.g);
    out["verified"] = true;
    return out;
}

json approx_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    HovmSpec spec = make_spec(j.g, j.lambda, j.holes);
    if (o.k < 0) throw ValidationError("k must be nonnegative");
    auto [mk, lk] = order_k_truncations(j.g, spec.holes, o.k, integrability(j.lambda));
    HoleSet chosen;
    if (o.side == "upper") chosen = mk;
    else if (o.side == "lower") chosen = lk;
    else throw ValidationError("side must be upper or lower");
    HovmSpec approx{j.g, j.lambda, chosen};
    auto ws = weight_set(approx, j.height);
    return json{{"k", o.k},
                {"side", o.side},
                {"holes", sets_to_json(chosen.min_holes)},
                {"cutoff", j.height},
                {"count", ws.size()},
                {"weights", depths_to_json(ws)}};
}

json reciprocity_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    BlockHoles bh = simples_in_block(build_block(j.g, j.lambda), j.holes);
    auto table = reciprocity_table(bh);
    json out = reciprocity_to_json(bh, table);
    if (!table.all_equal) throw Mismatch("reciprocity mismatch", out);
    return out;
}

json kl_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o);
    BlockHoles bh = simples_in_block(build_block(j.g, j.lambda), j.holes);
    auto kl = kl_bases(bh);
    json out = kl_to_json(kl);
    if (!kl.inverse || !kl.oracle_identity) throw Mismatch("Kazhdan-Lusztig check failed", out);
    return out;
}

json order_cmd(const json& in, const Options& o) {
    Job j = job_of(in, o, false);
    need_finite(j.g);
    long long direct = order_of_hole_product(j.g, j.holes, OrderMethod::direct);
    long long formula = order_of_hole_product(j.g, j.holes, OrderMethod::lcm_formula);
    if (direct != formula)
        throw Mismatch("order mismatch", json{{"direct", direct}, {"lcm_formula", formula}, {"input", in}});
    return json{{"order", direct}};
}

json verify_cmd(const Options& o) {
    VerifyResult r = run_suite(o.suite, o.seed, o.trials);
    if (!r.ok)
        throw Mismatch("verification mismatch",
                       json{{"status", "mismatch"}, {"trials", r.trials}, {"counterexample", r.counterexample}});
    return json{{"status", "ok"}, {"trials", r.trials}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher order Verma module toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--input", o.input, "JSON input file (default stdin)");
    app.add_option("--threads", o.threads, "worker threads")->envname("HOVM_THREADS");
    app.add_flag("--allow-large-height", o.allow_large, "lift the height cap of 30");

    auto* weights = app.add_subcommand("weights", "weight set up to the height cutoff");
    weights->add_option("--method", o.weights_method, "transversal | minkowski | psi | altwts");
    weights->add_option("--k", o.k, "admissible order for --method psi");
    auto* member = app.add_subcommand("member", "weight membership of one depth vector");
    auto* chr = app.add_subcommand("char", "truncated character");
    chr->add_option("--method", o.method, "union | inclusion-exclusion | koszul | taylor");
    auto* res = app.add_subcommand("resolution", "BGG-type resolution");
    res->add_option("--setting", o.setting, "koszul | taylor | dihedral");
    auto* approx = app.add_subcommand("approx", "kth order approximation");
    approx->add_option("--k", o.k, "order")->required();
    approx->add_option("--side", o.side, "upper | lower");
    auto* recip = app.add_subcommand("reciprocity", "BGG reciprocity table of a block");
    auto* kl = app.add_subcommand("kl", "truncated Kazhdan-Lusztig expansions of a block");
    auto* order = app.add_subcommand("order-product", "order of a product of hole reflections");
    auto* verify = app.add_subcommand("verify", "seeded randomized checks against the oracle");
    verify->add_option("--suite", o.suite, "weights | chars | reciprocity | kl | resolutions");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--trials", o.trials, "number of trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.threads < 0) throw ValidationError("--threads must be nonnegative");
        set_threads(o.threads);
        json out;
        if (*verify) {
            out = verify_cmd(o);
        } else {
            json in = read_input(o);
            if (*weights) out = weights_cmd(in, o);
            else if (*member) out = member_cmd(in, o);
            else if (*chr) out = char_cmd(in, o);
            else if (*res) out = resolution_cmd(in, o);
            else if (*approx) out = approx_cmd(in, o);
            else if (*recip) out = reciprocity_cmd(in, o);
            else if (*kl) out = kl_cmd(in, o);
            else if (*order) out = order_cmd(in, o);
        }
        std::cout << out.dump() << "\n";
        return 0;
    } catch (const Mismatch& e) {
        json dump = e.dump();
        if (!dump.contains("status")) dump = json{{"status", "mismatch"}, {"error", e.what()}, {"counterexample", dump}};
        std::cout << dump.dump() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", std::string("invalid input: ") + e.what()}}.dump() << "\n";
        return 2;
    }
}
