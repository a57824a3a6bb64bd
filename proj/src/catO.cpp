#include "hovm/catO.hpp"

#include <algorithm>

namespace hovm {

Depth Block::member(NodeSet k) const {
    if (!k.subset_of(kstar)) throw ValidationError("block member " + k.str() + " is not inside K*");
    Depth c(static_cast<std::size_t>(g.rank()), 0);
    k.for_each([&](int i) { c[static_cast<std::size_t>(i)] = static_cast<int>(*tilde.evals[static_cast<std::size_t>(i)] + 1); });
    return c;
}

HighestWeight Block::member_weight(NodeSet k) const { return shifted(g, tilde, member(k)); }

int Block::cutoff() const {
    int s = 4;
    kstar.for_each([&](int i) { s += static_cast<int>(*tilde.evals[static_cast<std::size_t>(i)] + 1); });
    return s;
}

Block build_block(const Gcm& g, const HighestWeight& lambda) {
    if (!is_sl2n(g)) throw ValidationError("category O^H blocks are supported over sl2^n only");
    if (lambda.rank() != g.rank()) throw ValidationError("lambda length does not match the rank");
    Block b{g, lambda, lambda, NodeSet(), NodeSet()};
    for (int i = 0; i < g.rank(); ++i) {
        const CartanEval& e = lambda.evals[static_cast<std::size_t>(i)];
        if (!e || *e == -1) continue;
        b.kstar.insert(i);
        if (*e < -1) {
            b.tilde.evals[static_cast<std::size_t>(i)] = -*e - 2;
            b.moved.insert(i);
        }
    }
    return b;
}

bool BlockHoles::in_index(NodeSet k) const {
    return std::find(simple_index.begin(), simple_index.end(), k) != simple_index.end();
}

BlockHoles simples_in_block(const Block& block, const std::vector<NodeSet>& holes) {
    BlockHoles bh{block, minimalize(block.g, holes, block.g.all()), {}};
    for_each_subset(block.kstar, [&](NodeSet k) {
        if (h_prime(block.g, block.member_weight(k), bh.holes)) bh.simple_index.push_back(k);
    });
    sort_sets(bh.simple_index);
    return bh;
}

HovmSpec universal_cover(const BlockHoles& bh, NodeSet k) {
    HighestWeight mu = bh.block.member_weight(k);
    auto hp = h_prime(bh.block.g, mu, bh.holes);
    if (!hp) throw ValidationError("L(w_K . lambda) for K = " + k.str() + " is not in the category");
    return HovmSpec{bh.block.g, mu, *hp};
}

Character cover_char(const BlockHoles& bh, NodeSet k) {
    HovmSpec cover = universal_cover(bh, k);
    int n = bh.block.cutoff();
    return oracle_char(oracle_module(cover.lambda, cover.holes.min_holes, n)).shift_by(bh.block.member(k));
}

int jh_multiplicity(const BlockHoles& bh, NodeSet k, NodeSet k_prime) {
    if (!bh.in_index(k)) throw ValidationError("K = " + k.str() + " does not index a simple of the category");
    return (k.subset_of(k_prime) && bh.in_index(k_prime)) ? 1 : 0;
}

ReciprocityTable reciprocity_table(const BlockHoles& bh) {
    const Block& b = bh.block;
    ReciprocityTable table;
    table.cutoff = b.cutoff();
    // oracle composition factors of each cover
    std::map<std::uint32_t, std::vector<JhTerm>> jh;
    for (NodeSet kp : bh.simple_index) jh[kp.mask()] = oracle_jh(b.tilde, cover_char(bh, kp));
    for (NodeSet k : bh.simple_index) {
        Depth top = b.member(k);
        HoleSet h0 = *h_prime(b.g, b.member_weight(k), bh.holes);
        auto nodes = k.elements();
        std::map<std::uint32_t, long long> lhs;
        std::vector<StandardFactor> factors;
        // l ranges over the product of [0, m_k] for k in K
        std::vector<int> l(nodes.size(), 0);
        while (true) {
            Depth mu = top;
            for (std::size_t t = 0; t < nodes.size(); ++t) mu[static_cast<std::size_t>(nodes[t])] -= l[t];
            bool in_block = true;
            NodeSet kk;
            for (std::size_t t = 0; t < nodes.size(); ++t) {
                int v = mu[static_cast<std::size_t>(nodes[t])];
                if (v == top[static_cast<std::size_t>(nodes[t])]) kk.insert(nodes[t]);
                else if (v != 0) in_block = false;
            }
            if (in_block) {
                ++lhs[kk.mask()];
                factors.push_back({kk, mu, h0});
            }
            std::size_t t = 0;
            while (t < l.size() && ++l[t] > top[static_cast<std::size_t>(nodes[t])]) l[t++] = 0;
            if (t == l.size()) break;
        }
        std::sort(factors.begin(), factors.end(),
                  [](const StandardFactor& x, const StandardFactor& y) { return height(x.weight) > height(y.weight); });
        table.filtrations[k.mask()] = factors;
        for (NodeSet kp : bh.simple_index) {
            long long rhs = 0;
            Depth want = b.member(k);
            for (const auto& t : jh[kp.mask()])
                if (t.weight == want) rhs += t.mult;
            ReciprocityEntry e{k, kp, lhs.count(kp.mask()) ? lhs[kp.mask()] : 0, rhs, jh_multiplicity(bh, kp, k)};
            if (e.lhs != e.rhs || e.rhs != e.formula) table.all_equal = false;
            table.entries.push_back(e);
        }
    }
    return table;
}

KlBases kl_bases(const BlockHoles& bh) {
    const Block& b = bh.block;
    KlBases kl;
    for (NodeSet k : bh.simple_index) kl.index.push_back(b.kstar - k);
    sort_sets(kl.index);
    auto in_index = [&](NodeSet s) { return std::find(kl.index.begin(), kl.index.end(), s) != kl.index.end(); };
    for (NodeSet s : kl.index) {
        for_each_subset(s, [&](NodeSet sp) {
            if (!in_index(sp)) return;
            kl.t_in_c[s.mask()][sp.mask()] = 1;
            kl.c_in_t[s.mask()][sp.mask()] = ((s.size() - sp.size()) % 2) ? -1 : 1;
        });
    }
    kl.inverse = true;
    for (NodeSet s : kl.index)
        for (NodeSet u : kl.index) {
            long long v = 0;
            for (const auto& [mid, c] : kl.c_in_t[s.mask()]) {
                auto& row = kl.t_in_c[mid];
                auto it = row.find(u.mask());
                if (it != row.end()) v += c * it->second;
            }
            if (v != (s == u ? 1 : 0)) kl.inverse = false;
        }
    // T_S is the cover of the simple with integrability S; C_S is that simple
    kl.oracle_identity = true;
    int n = b.cutoff();
    std::map<std::uint32_t, Character> t_char, c_char;
    for (NodeSet s : kl.index) {
        NodeSet k = b.kstar - s;
        t_char[s.mask()] = cover_char(bh, k);
        c_char[s.mask()] = sl2n_simple_char(b.tilde, b.member(k), n);
    }
    for (NodeSet s : kl.index) {
        Character lhs(b.g.rank(), n), rhs(b.g.rank(), n);
        for (const auto& [sp, c] : kl.c_in_t[s.mask()]) lhs = lhs + t_char[sp].scaled(c);
        for (const auto& [sp, c] : kl.t_in_c[s.mask()]) rhs = rhs + c_char[sp].scaled(c);
        if (!(lhs == c_char[s.mask()]) || !(rhs == t_char[s.mask()])) kl.oracle_identity = false;
    }
    return kl;
}

std::string kl_expansion_string(NodeSet s, const std::map<std::uint32_t, long long>& terms) {
    auto name = [](NodeSet x) {
        if (x.empty()) return std::string("T_{}");
        std::string out;
        for (int v : x.one_based()) out += "T_" + std::to_string(v);
        return out;
    };
    std::vector<std::pair<NodeSet, long long>> items;
    for (const auto& [m, c] : terms) items.emplace_back(NodeSet(m), c);
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
        return lex_less(x.first, y.first);
    });
    std::string out = "C_" + s.str() + " =";
    bool first = true;
    for (const auto& [x, c] : items) {
        if (c == 0) continue;
        long long a = c < 0 ? -c : c;
        if (first) out += c < 0 ? " -" : "";
        else out += c < 0 ? " - " : " + ";
        if (first) out += " ";
        if (a != 1) out += std::to_string(a);
        out += name(x);
        first = false;
    }
    return out;
}

}  // namespace hovm
