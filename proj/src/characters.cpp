#include "hovm/characters.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>

namespace hovm {

long long Character::coeff(const Depth& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
}

void Character::add_term(const Depth& c, long long v) {
    if (v == 0 || height(c) > cutoff_) return;
    auto [it, fresh] = terms_.emplace(c, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

Character Character::operator+(const Character& o) const {
    Character r(rank_, std::min(cutoff_, o.cutoff_));
    for (const auto& [c, v] : terms_) r.add_term(c, v);
    for (const auto& [c, v] : o.terms_) r.add_term(c, v);
    return r;
}

Character Character::operator-(const Character& o) const { return *this + o.scaled(-1); }

Character Character::scaled(long long k) const {
    Character r(rank_, cutoff_);
    if (k == 0) return r;
    for (const auto& [c, v] : terms_) r.terms_.emplace(c, v * k);
    return r;
}

Character Character::shift_by(const Depth& d) const {
    Character r(rank_, cutoff_);
    for (const auto& [c, v] : terms_) r.add_term(add(c, d), v);
    return r;
}

Character Character::truncated(int cutoff) const {
    Character r(rank_, std::min(cutoff, cutoff_));
    for (const auto& [c, v] : terms_) r.add_term(c, v);
    return r;
}

std::vector<Depth> Character::support() const {
    std::vector<Depth> s;
    for (const auto& [c, v] : terms_) s.push_back(c);
    return s;
}

bool Character::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool Character::zero_one() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

PartitionCounter::PartitionCounter(std::vector<Depth> roots) : roots_(std::move(roots)) {
    std::stable_sort(roots_.begin(), roots_.end(),
                     [](const Depth& a, const Depth& b) { return height(a) > height(b); });
    simple_start_ = roots_.size();
    while (simple_start_ > 0 && height(roots_[simple_start_ - 1]) == 1) {
        --simple_start_;
        const Depth& r = roots_[simple_start_];
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i]) simple_mask_.insert(static_cast<int>(i));
    }
    memo_.resize(roots_.size());
}

long long PartitionCounter::count(const Depth& beta) const {
    if (!nonnegative(beta)) return 0;
    return rec(beta, 0);
}

long long PartitionCounter::rec(const Depth& beta, std::size_t i) const {
    if (i >= simple_start_) {
        for (std::size_t k = 0; k < beta.size(); ++k)
            if (beta[k] && !simple_mask_.contains(static_cast<int>(k))) return 0;
        return 1;
    }
    {
        std::shared_lock lock(mu_);
        auto it = memo_[i].find(beta);
        if (it != memo_[i].end()) return it->second;
    }
    long long total = 0;
    Depth cur = beta;
    const Depth& r = roots_[i];
    while (true) {
        total += rec(cur, i + 1);
        bool ok = true;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            cur[k] -= r[k];
            if (cur[k] < 0) ok = false;
        }
        if (!ok) break;
    }
    std::unique_lock lock(mu_);
    memo_[i].emplace(beta, total);
    return total;
}

const PartitionCounter& partition_counter(const Gcm& g, NodeSet support) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, std::uint32_t>, std::unique_ptr<PartitionCounter>> registry;
    std::lock_guard lock(mu);
    auto key = std::make_pair(g.entries(), support.mask());
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    RootSystem rs = positive_roots(g);
    std::vector<Depth> roots;
    for (const auto& r : rs.positive_roots) {
        bool inside = true;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] && !support.contains(static_cast<int>(i))) inside = false;
        if (inside) roots.push_back(r);
    }
    auto [pos, ok] = registry.emplace(key, std::make_unique<PartitionCounter>(std::move(roots)));
    return *pos->second;
}

long long kostant_partition(const Gcm& g, const Depth& beta) {
    if (!g.finite_type()) throw ValidationError("Kostant partition function requires finite type");
    return partition_counter(g, g.all()).count(beta);
}

std::vector<OrbitTerm> dot_orbit(const Gcm& g, const HighestWeight& lambda, NodeSet j, std::size_t cap) {
    if (!j.subset_of(integrability(lambda))) throw ValidationError("W_J orbit needs J inside J_lambda");
    if (!g.finite_type_on(j)) throw ValidationError("W_J orbit over an infinite-type subdiagram");
    std::vector<OrbitTerm> out;
    std::map<Depth, int> seen;
    std::deque<Depth> queue;
    Depth zero(static_cast<std::size_t>(g.rank()), 0);
    seen.emplace(zero, 0);
    queue.push_back(zero);
    auto nodes = j.elements();
    while (!queue.empty()) {
        Depth c = queue.front();
        queue.pop_front();
        int len = seen[c];
        out.push_back({c, len});
        for (int i : nodes) {
            Depth r = dot_reflect(g, lambda, c, i);
            if (seen.emplace(r, len + 1).second) {
                if (seen.size() > cap) throw ValidationError("Weyl group orbit exceeds cap");
                queue.push_back(std::move(r));
            }
        }
    }
    return out;
}

namespace {

Character alternating_sum(const Gcm& g, const std::vector<OrbitTerm>& orbit, const PartitionCounter& kp,
                          NodeSet enum_support, int cutoff, Exec ex) {
    std::vector<OrbitTerm> terms;
    for (const auto& t : orbit)
        if (height(t.depth) <= cutoff) terms.push_back(t);
    auto keys = depths_up_to(g.rank(), cutoff, enum_support);
    std::vector<long long> vals(keys.size(), 0);
    parallel_for(keys.size(), ex, [&](std::size_t k) {
        long long s = 0;
        for (const auto& t : terms) {
            Depth beta = sub(keys[k], t.depth);
            if (!nonnegative(beta)) continue;
            long long p = kp.count(beta);
            s += (t.length % 2 ? -p : p);
        }
        vals[k] = s;
    });
    Character ch(g.rank(), cutoff);
    for (std::size_t k = 0; k < keys.size(); ++k) ch.add_term(keys[k], vals[k]);
    return ch;
}

}  // namespace

Character verma_char(const Gcm& g, int cutoff, Exec ex) {
    if (!g.finite_type()) throw ValidationError("Verma character requires finite type");
    HighestWeight zero{std::vector<CartanEval>(static_cast<std::size_t>(g.rank()), 0)};
    return alternating_sum(g, dot_orbit(g, zero, NodeSet()), partition_counter(g, g.all()), g.all(), cutoff, ex);
}

Character parabolic_verma_char(const Gcm& g, const HighestWeight& lambda, NodeSet j, int cutoff, Exec ex) {
    if (!g.finite_type()) throw ValidationError("parabolic Verma character requires finite type");
    if (!j.subset_of(integrability(lambda))) throw ValidationError("parabolic Verma needs J inside J_lambda");
    return alternating_sum(g, dot_orbit(g, lambda, j), partition_counter(g, g.all()), g.all(), cutoff, ex);
}

Character simple_finite_char(const Gcm& g, const HighestWeight& nu, NodeSet j, int cutoff, Exec ex) {
    if (!g.finite_type_on(j)) throw ValidationError("finite-dimensional character over an infinite-type J");
    if (!j.subset_of(integrability(nu))) throw ValidationError("simple finite character needs a J-dominant weight");
    if (!g.finite_type()) {
        // restrict to the Levi: the full root system is not available
        Gcm sub = submatrix(g, j);
        auto nodes = j.elements();
        HighestWeight snu;
        for (int i : nodes) snu.evals.push_back(nu.evals[static_cast<std::size_t>(i)]);
        Character small = simple_finite_char(sub, snu, sub.all(), cutoff, ex);
        Character ch(g.rank(), cutoff);
        for (const auto& [c, v] : small.terms()) {
            Depth full(static_cast<std::size_t>(g.rank()), 0);
            for (std::size_t k = 0; k < nodes.size(); ++k) full[static_cast<std::size_t>(nodes[k])] = c[k];
            ch.add_term(full, v);
        }
        return ch;
    }
    return alternating_sum(g, dot_orbit(g, nu, j), partition_counter(g, j), j, cutoff, ex);
}

}  // namespace hovm
