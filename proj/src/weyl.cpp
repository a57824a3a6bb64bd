#include "hovm/weyl.hpp"

#include <numeric>

namespace hovm {

WeylElement WeylElement::identity(int n) {
    WeylElement w;
    w.n_ = n;
    w.m_.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) w.m_[static_cast<std::size_t>(i * n + i)] = 1;
    return w;
}

WeylElement WeylElement::simple_reflection(const Gcm& g, int i) {
    WeylElement w = identity(g.rank());
    // s_i(alpha_j) = alpha_j - a(i,j) alpha_i
    for (int j = 0; j < g.rank(); ++j) w.m_[static_cast<std::size_t>(i * w.n_ + j)] -= g(i, j);
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement r;
    r.n_ = n_;
    r.m_.assign(m_.size(), 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            long long a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < n_; ++j) r.m_[static_cast<std::size_t>(i * n_ + j)] += a * o.at(k, j);
        }
    return r;
}

bool WeylElement::is_identity() const { return *this == identity(n_); }

std::vector<long long> WeylElement::apply(const std::vector<long long>& x) const {
    std::vector<long long> y(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) y[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

WeylElement hole_reflection(const Gcm& g, NodeSet h) {
    if (!g.independent(h)) throw ValidationError("hole " + h.str() + " is not independent");
    WeylElement w = WeylElement::identity(g.rank());
    h.for_each([&](int i) { w = w * WeylElement::simple_reflection(g, i); });
    return w;
}

long long order(const WeylElement& w, long long cap) {
    WeylElement p = w;
    for (long long k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * w;
    }
    throw ValidationError("element order exceeds cap");
}

long long order_of_hole_product(const Gcm& g, const std::vector<NodeSet>& holes, OrderMethod method) {
    NodeSet all;
    for (NodeSet h : holes) {
        if (!g.independent(h)) throw ValidationError("hole " + h.str() + " is not independent");
        if (h.intersects(all)) throw ValidationError("holes are not pairwise disjoint");
        all = all | h;
    }
    if (!g.finite_type_on(all)) throw ValidationError("hole product in an infinite-type subdiagram");
    if (method == OrderMethod::direct) {
        WeylElement w = WeylElement::identity(g.rank());
        for (NodeSet h : holes) w = w * hole_reflection(g, h);
        return order(w);
    }
    long long l = 1;
    for (NodeSet c : g.components(all)) l = std::lcm(l, static_cast<long long>(coxeter_number(g, c)));
    return l;
}

std::vector<SemigroupElement> semigroup(std::size_t k) {
    if (k > 20) throw ValidationError("semigroup on more than 20 holes");
    std::vector<SemigroupElement> out;
    for (std::uint32_t j = 0; j < (1u << k); ++j) out.push_back({j});
    return out;
}

NodeSet union_of(const std::vector<NodeSet>& holes, std::uint32_t index) {
    NodeSet u;
    for (std::size_t t = 0; t < holes.size(); ++t)
        if ((index >> t) & 1u) u = u | holes[t];
    return u;
}

Depth semigroup_act(const Gcm& g, const HighestWeight& lambda, const std::vector<NodeSet>& holes,
                    SemigroupElement w, SemigroupElement on) {
    NodeSet u = union_of(holes, (w * on).index);
    if (!u.subset_of(integrability(lambda))) throw ValidationError("hole union leaves J_lambda");
    Depth c(static_cast<std::size_t>(g.rank()), 0);
    u.for_each([&](int i) { c[static_cast<std::size_t>(i)] = static_cast<int>(*lambda.evals[static_cast<std::size_t>(i)] + 1); });
    return c;
}

}  // namespace hovm
