#include "hovm/weights.hpp"

namespace hovm {

HighestWeight make_weight(const Gcm& g, std::vector<CartanEval> evals) {
    if (static_cast<int>(evals.size()) != g.rank())
        throw ValidationError("lambda length " + std::to_string(evals.size()) + " does not match rank " +
                              std::to_string(g.rank()));
    return HighestWeight{std::move(evals)};
}

NodeSet integrability(const HighestWeight& lambda) {
    NodeSet j;
    for (int i = 0; i < lambda.rank(); ++i)
        if (dominant_integral(lambda.evals[static_cast<std::size_t>(i)])) j.insert(i);
    return j;
}

CartanEval eval_at(const Gcm& g, const HighestWeight& lambda, const Depth& c, int j) {
    const CartanEval& e = lambda.evals[static_cast<std::size_t>(j)];
    if (!e) return std::nullopt;
    long long v = *e;
    for (int i = 0; i < g.rank(); ++i) v -= static_cast<long long>(g(j, i)) * c[static_cast<std::size_t>(i)];
    return v;
}

HighestWeight shifted(const Gcm& g, const HighestWeight& lambda, const Depth& c) {
    HighestWeight mu;
    for (int j = 0; j < g.rank(); ++j) mu.evals.push_back(eval_at(g, lambda, c, j));
    return mu;
}

Depth dot_reflect(const Gcm& g, const HighestWeight& lambda, const Depth& c, int j) {
    CartanEval e = eval_at(g, lambda, c, j);
    if (!e) throw ValidationError("dot reflection at a non-integral node " + std::to_string(j + 1));
    Depth r = c;
    r[static_cast<std::size_t>(j)] += static_cast<int>(*e + 1);
    return r;
}

Depth lambda_H(const Gcm& g, const HighestWeight& lambda, NodeSet h) {
    if (!g.independent(h)) throw ValidationError("hole " + h.str() + " is not independent");
    if (!h.subset_of(integrability(lambda))) throw ValidationError("hole " + h.str() + " is not inside J_lambda");
    Depth c(static_cast<std::size_t>(g.rank()), 0);
    h.for_each([&](int i) { c[static_cast<std::size_t>(i)] = static_cast<int>(*lambda.evals[static_cast<std::size_t>(i)] + 1); });
    return c;
}

Depth longest_dot(const Gcm& g, const HighestWeight& lambda, const Depth& c, NodeSet s) {
    if (!g.finite_type_on(s)) throw ValidationError("longest element of an infinite Weyl group");
    Depth cur = c;
    // s-dominant in the rho-shifted sense => apply reflections until rho-antidominant
    for (std::size_t guard = 0; guard < 1000000; ++guard) {
        int pick = -1;
        for (int j : s.elements()) {
            CartanEval e = eval_at(g, lambda, cur, j);
            if (!e) throw ValidationError("longest element on a non-integral node");
            if (*e + 1 > 0) {
                pick = j;
                break;
            }
        }
        if (pick < 0) return cur;
        cur = dot_reflect(g, lambda, cur, pick);
    }
    throw ValidationError("longest element iteration did not terminate");
}

Conjugate dominant_conjugate_J(const Gcm& g, const HighestWeight& lambda, const Depth& c, NodeSet j) {
    if (!g.finite_type_on(j)) throw ValidationError("dominant conjugate over an infinite-type subdiagram");
    Conjugate out;
    out.evals.assign(static_cast<std::size_t>(g.rank()), 0);
    out.shift.assign(static_cast<std::size_t>(g.rank()), 0);
    auto nodes = j.elements();
    for (int i : nodes) {
        CartanEval e = eval_at(g, lambda, c, i);
        if (!e) throw ValidationError("dominant conjugate with a non-integral evaluation on J");
        out.evals[static_cast<std::size_t>(i)] = *e;
    }
    for (std::size_t guard = 0; guard < 10000000; ++guard) {
        int pick = -1;
        for (int i : nodes)
            if (out.evals[static_cast<std::size_t>(i)] < 0) {
                pick = i;
                break;
            }
        if (pick < 0) return out;
        long long e = out.evals[static_cast<std::size_t>(pick)];
        // s_pick(mu) = mu - e alpha_pick
        out.shift[static_cast<std::size_t>(pick)] -= e;
        for (int i : nodes) out.evals[static_cast<std::size_t>(i)] -= e * g(i, pick);
    }
    throw ValidationError("dominant conjugate did not terminate");
}

}  // namespace hovm
