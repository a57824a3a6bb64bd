#include "hovm/oracle.hpp"

#include <algorithm>

namespace hovm {

bool is_sl2n(const Gcm& g) {
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < g.rank(); ++j)
            if (i != j && g(i, j) != 0) return false;
    return g.rank() > 0;
}

MonomialModule oracle_module(const HighestWeight& lambda, const std::vector<NodeSet>& holes, int cutoff) {
    NodeSet j = integrability(lambda);
    MonomialModule m{lambda, {}, cutoff};
    for (NodeSet h : holes) {
        if (!h.subset_of(j)) throw ValidationError("oracle hole " + h.str() + " is not inside J_lambda");
        Depth g(static_cast<std::size_t>(lambda.rank()), 0);
        h.for_each([&](int i) { g[static_cast<std::size_t>(i)] = static_cast<int>(*lambda.evals[static_cast<std::size_t>(i)] + 1); });
        m.generators.push_back(g);
    }
    std::sort(m.generators.begin(), m.generators.end());
    m.generators.erase(std::unique(m.generators.begin(), m.generators.end()), m.generators.end());
    return m;
}

std::vector<Depth> oracle_weights(const MonomialModule& m) {
    std::vector<Depth> out;
    for (auto& c : depths_up_to(m.rank(), m.cutoff)) {
        bool killed = std::any_of(m.generators.begin(), m.generators.end(),
                                  [&](const Depth& gen) { return dominates(c, gen); });
        if (!killed) out.push_back(std::move(c));
    }
    return out;
}

Character oracle_char(const MonomialModule& m) {
    Character ch(m.rank(), m.cutoff);
    for (const auto& c : oracle_weights(m)) ch.add_term(c, 1);
    return ch;
}

HoleSet oracle_holes(const MonomialModule& m) {
    NodeSet j = integrability(m.lambda);
    std::vector<NodeSet> holes;
    for (const auto& gen : m.generators) {
        NodeSet h;
        for (int i = 0; i < m.rank(); ++i) {
            int v = gen[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            const CartanEval& e = m.lambda.evals[static_cast<std::size_t>(i)];
            if (!j.contains(i) || v != *e + 1)
                throw ValidationError("generator " + depth_str(gen) + " is not of hole form");
            h.insert(i);
        }
        holes.push_back(h);
    }
    return antichain_of(holes, j);
}

Character sl2n_simple_char(const HighestWeight& frame, const Depth& mu, int cutoff) {
    const int n = frame.rank();
    std::vector<int> top(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const CartanEval& e = frame.evals[static_cast<std::size_t>(i)];
        long long v = e ? *e - 2LL * mu[static_cast<std::size_t>(i)] : -1;
        top[static_cast<std::size_t>(i)] = (e && v >= 0) ? static_cast<int>(v) : -1;  // -1: ray
    }
    Character ch(n, cutoff);
    int room = cutoff - height(mu);
    if (room < 0) return ch;
    for (const auto& d : depths_up_to(n, room)) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (top[static_cast<std::size_t>(i)] >= 0 && d[static_cast<std::size_t>(i)] > top[static_cast<std::size_t>(i)]) ok = false;
        if (ok) ch.add_term(add(mu, d), 1);
    }
    return ch;
}

std::vector<JhTerm> oracle_jh(const HighestWeight& frame, const Character& ch) {
    std::vector<JhTerm> out;
    Character rest = ch;
    while (!rest.terms().empty()) {
        const Depth* pick = nullptr;
        for (const auto& [c, v] : rest.terms())
            if (!pick || height(c) < height(*pick)) pick = &c;
        Depth mu = *pick;
        long long mult = rest.coeff(mu);
        if (mult < 0) throw ValidationError("negative multiplicity in Jordan-Holder peel at " + depth_str(mu));
        out.push_back({mu, mult});
        rest = rest - sl2n_simple_char(frame, mu, ch.cutoff()).scaled(mult);
    }
    return out;
}

std::vector<JhTerm> oracle_jh(const MonomialModule& m) { return oracle_jh(m.lambda, oracle_char(m)); }

}  // namespace hovm
