#include "hovm/io.hpp"

namespace hovm {

Gcm gcm_from_json(const json& j) {
    if (j.is_string()) return parse_gcm(j.get<std::string>());
    if (!j.is_object()) throw ValidationError("algebra must be a type string or an object");
    if (j.contains("type")) {
        if (!j["type"].is_string()) throw ValidationError("algebra type must be a string");
        return parse_gcm(j["type"].get<std::string>());
    }
    if (j.contains("matrix")) {
        const json& m = j["matrix"];
        if (!m.is_array()) throw ValidationError("matrix must be an array of rows");
        std::vector<std::vector<int>> rows;
        for (const auto& r : m) {
            if (!r.is_array()) throw ValidationError("matrix rows must be arrays");
            std::vector<int> row;
            for (const auto& v : r) {
                if (!v.is_number_integer()) throw ValidationError("matrix entries must be integers");
                row.push_back(v.get<int>());
            }
            rows.push_back(std::move(row));
        }
        return Gcm(std::move(rows));
    }
    throw ValidationError("algebra object needs \"type\" or \"matrix\"");
}

json gcm_to_json(const Gcm& g) { return json{{"matrix", g.rows()}}; }

HighestWeight weight_from_json(const Gcm& g, const json& j) {
    if (!j.is_array()) throw ValidationError("lambda must be an array");
    std::vector<CartanEval> evals;
    for (const auto& v : j) {
        if (v.is_string() && v.get<std::string>() == "x") evals.emplace_back(std::nullopt);
        else if (v.is_number_integer()) {
            long long x = v.get<long long>();
            if (x < -1000000 || x > 1000000) throw ValidationError("lambda evaluation out of range");
            evals.emplace_back(x);
        } else throw ValidationError("lambda entries must be integers or \"x\"");
    }
    return make_weight(g, std::move(evals));
}

json weight_to_json(const HighestWeight& w) {
    json out = json::array();
    for (const auto& e : w.evals) {
        if (e) out.push_back(*e);
        else out.push_back("x");
    }
    return out;
}

std::vector<NodeSet> sets_from_json(const Gcm& g, const json& j) {
    if (!j.is_array()) throw ValidationError("holes must be an array of node arrays");
    std::vector<NodeSet> out;
    for (const auto& h : j) {
        if (!h.is_array()) throw ValidationError("each hole must be an array of nodes");
        NodeSet s;
        for (const auto& v : h) {
            if (!v.is_number_integer()) throw ValidationError("nodes must be integers");
            int x = v.get<int>();
            if (x < 1 || x > g.rank()) throw ValidationError("node " + std::to_string(x) + " out of range");
            s.insert(x - 1);
        }
        out.push_back(s);
    }
    return out;
}

json set_to_json(NodeSet s) { return json(s.one_based()); }

json sets_to_json(const std::vector<NodeSet>& sets) {
    std::vector<NodeSet> sorted = sets;
    sort_sets(sorted);
    json out = json::array();
    for (NodeSet s : sorted) out.push_back(set_to_json(s));
    return out;
}

Depth depth_from_json(const Gcm& g, const json& j) {
    if (!j.is_array()) throw ValidationError("depth must be an array");
    Depth c;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1000000)
            throw ValidationError("depth entries must be nonnegative integers");
        c.push_back(v.get<int>());
    }
    if (static_cast<int>(c.size()) != g.rank()) throw ValidationError("depth length does not match the rank");
    return c;
}

json depths_to_json(const std::vector<Depth>& ds) {
    json out = json::array();
    for (const auto& d : ds) out.push_back(d);
    return out;
}

json character_to_json(const Character& ch) {
    json terms = json::array();
    for (const auto& [c, v] : ch.terms()) terms.push_back(json{{"depth", c}, {"mult", v}});
    return json{{"cutoff", ch.cutoff()}, {"terms", terms}};
}

namespace {
json index_json(const Resolution& res, std::uint32_t index) {
    json out = json::array();
    for (std::size_t t = 0; t < res.holes.size(); ++t)
        if ((index >> t) & 1u) out.push_back(t + 1);
    return out;
}
}  // namespace

json resolution_to_json(const Resolution& res, const Gcm&) {
    json levels = json::array();
    for (const auto& lvl : res.levels) {
        json l = json::array();
        for (const auto& e : lvl) l.push_back(json{{"index", index_json(res, e.index)}, {"depth", e.weight}});
        levels.push_back(l);
    }
    json diffs = json::array();
    for (const auto& d : res.differentials)
        diffs.push_back(json{{"source", index_json(res, d.source)},
                             {"target", index_json(res, d.target)},
                             {"sign", d.sign},
                             {"exponent", d.exponent}});
    json holes = json::array();
    for (NodeSet h : res.holes) holes.push_back(set_to_json(h));
    return json{{"setting", res.setting == Setting::koszul ? "koszul" : "taylor"},
                {"holes", holes},
                {"levels", levels},
                {"differentials", diffs}};
}

json reciprocity_to_json(const BlockHoles& bh, const ReciprocityTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries)
        entries.push_back(json{{"K", set_to_json(e.k)},
                               {"K_prime", set_to_json(e.k_prime)},
                               {"standard_multiplicity", e.lhs},
                               {"jh_multiplicity", e.rhs},
                               {"formula", e.formula}});
    json filtrations = json::array();
    for (const auto& [mask, factors] : t.filtrations) {
        json fs = json::array();
        for (const auto& f : factors)
            fs.push_back(json{{"member", set_to_json(f.member)},
                              {"depth", f.weight},
                              {"holes", sets_to_json(f.holes.min_holes)}});
        filtrations.push_back(json{{"K", set_to_json(NodeSet(mask))}, {"standards", fs}});
    }
    return json{{"K_star", set_to_json(bh.block.kstar)},
                {"representative", weight_to_json(bh.block.tilde)},
                {"simples", sets_to_json(bh.simple_index)},
                {"cutoff", t.cutoff},
                {"entries", entries},
                {"filtrations", filtrations},
                {"equal", t.all_equal}};
}

json kl_to_json(const KlBases& kl) {
    auto table = [](const std::map<std::uint32_t, std::map<std::uint32_t, long long>>& m) {
        json out = json::array();
        for (const auto& [s, row] : m) {
            json terms = json::array();
            for (const auto& [sp, c] : row) terms.push_back(json{{"set", set_to_json(NodeSet(sp))}, {"coeff", c}});
            out.push_back(json{{"set", set_to_json(NodeSet(s))}, {"terms", terms}});
        }
        return out;
    };
    json formulas = json::array();
    for (NodeSet s : kl.index) formulas.push_back(kl_expansion_string(s, kl.c_in_t.at(s.mask())));
    return json{{"index", sets_to_json(kl.index)},
                {"T_in_C", table(kl.t_in_c)},
                {"C_in_T", table(kl.c_in_t)},
                {"C_formulas", formulas},
                {"inverse", kl.inverse},
                {"oracle_identity", kl.oracle_identity}};
}

}  // namespace hovm
