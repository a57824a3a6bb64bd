#include "hovm/resolutions.hpp"

#include <map>

#include "hovm/weyl.hpp"

namespace hovm {

bool orthogonal(const Gcm& g, NodeSet a, NodeSet b) {
    if (a.intersects(b)) return false;
    bool ok = true;
    a.for_each([&](int i) { b.for_each([&](int j) { ok = ok && !g.adjacent(i, j); }); });
    return ok;
}

bool pairwise_orthogonal(const Gcm& g, const std::vector<NodeSet>& holes) {
    for (std::size_t x = 0; x < holes.size(); ++x)
        for (std::size_t y = x + 1; y < holes.size(); ++y)
            if (!orthogonal(g, holes[x], holes[y])) return false;
    return true;
}

namespace {

Depth m_on(const HovmSpec& spec, NodeSet s) {
    Depth c(static_cast<std::size_t>(spec.g.rank()), 0);
    s.for_each([&](int i) { c[static_cast<std::size_t>(i)] = static_cast<int>(*spec.lambda.evals[static_cast<std::size_t>(i)] + 1); });
    return c;
}

Resolution build(const HovmSpec& spec, Setting setting) {
    Resolution res;
    res.setting = setting;
    res.holes = spec.holes.min_holes;
    const std::size_t k = res.holes.size();
    if (k > 16) throw ValidationError("resolution on more than 16 holes");
    res.levels.resize(k + 1);
    for (std::uint32_t j = 0; j < (1u << k); ++j)
        res.levels[static_cast<std::size_t>(std::popcount(j))].push_back({j, m_on(spec, union_of(res.holes, j))});
    for (std::uint32_t src = 1; src < (1u << k); ++src) {
        int pos = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if (!((src >> t) & 1u)) continue;
            ++pos;
            std::uint32_t dst = src & ~(1u << t);
            NodeSet factor = res.holes[t];
            if (setting == Setting::taylor) factor = factor - union_of(res.holes, dst);
            res.differentials.push_back({src, dst, pos % 2 ? 1 : -1, m_on(spec, factor)});
        }
    }
    return res;
}

}  // namespace

Resolution koszul_resolution(const HovmSpec& spec) {
    if (!pairwise_orthogonal(spec.g, spec.holes.min_holes))
        throw ValidationError("Koszul resolution needs pairwise orthogonal holes; use the taylor or dihedral setting");
    return build(spec, Setting::koszul);
}

Resolution taylor_resolution(const HovmSpec& spec) {
    if (!spec.g.independent(integrability(spec.lambda)))
        throw ValidationError("Taylor resolution needs an independent J_lambda");
    return build(spec, Setting::taylor);
}

ComplexReport verify_complex_report(const Resolution& res, Exec ex) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, const ResDiff*> diff;
    std::map<std::uint32_t, const Depth*> weight;
    for (const auto& lvl : res.levels)
        for (const auto& e : lvl) weight[e.index] = &e.weight;
    for (const auto& d : res.differentials) {
        if (std::popcount(d.source) != std::popcount(d.target) + 1 || (d.target & ~d.source))
            return {false, "differential between non-adjacent index sets"};
        if (add(*weight.at(d.target), d.exponent) != *weight.at(d.source))
            return {false, "differential exponent does not match the weight shift"};
        diff[{d.source, d.target}] = &d;
    }
    const std::size_t k = res.holes.size();
    for (std::uint32_t src = 0; src < (1u << k); ++src) {
        for (std::size_t t = 0; t < k; ++t)
            if (((src >> t) & 1u) && !diff.count({src, src & ~(1u << t)}))
                return {false, "missing differential entry"};
    }
    std::vector<std::uint32_t> sources;
    for (std::uint32_t src = 0; src < (1u << k); ++src)
        if (std::popcount(src) >= 2) sources.push_back(src);
    std::vector<std::string> fails(sources.size());
    parallel_for(sources.size(), ex, [&](std::size_t s) {
        std::uint32_t src = sources[s];
        std::map<std::pair<std::uint32_t, Depth>, long long> sum;
        for (std::size_t a = 0; a < k; ++a) {
            if (!((src >> a) & 1u)) continue;
            std::uint32_t mid = src & ~(1u << a);
            const ResDiff* first = diff.at({src, mid});
            for (std::size_t b = 0; b < k; ++b) {
                if (!((mid >> b) & 1u)) continue;
                std::uint32_t dst = mid & ~(1u << b);
                const ResDiff* second = diff.at({mid, dst});
                sum[{dst, add(first->exponent, second->exponent)}] += first->sign * second->sign;
            }
        }
        for (const auto& [key, v] : sum)
            if (v != 0) {
                fails[s] = "d o d does not vanish from index " + std::to_string(src) + " to " + std::to_string(key.first);
                return;
            }
    });
    for (const auto& f : fails)
        if (!f.empty()) return {false, f};
    return {};
}

bool verify_complex(const Resolution& res, Exec ex) { return verify_complex_report(res, ex).ok; }

Character euler_char(const Gcm& g, const Resolution& res, int cutoff) {
    Character verma = verma_char(g, cutoff);
    Character total(g.rank(), cutoff);
    for (std::size_t t = 0; t < res.levels.size(); ++t)
        for (const auto& e : res.levels[t]) {
            Character piece = verma.shift_by(e.weight);
            total = total + (t % 2 ? piece.scaled(-1) : piece);
        }
    return total;
}

Depth hole_word_dot(const HovmSpec& spec, const std::vector<NodeSet>& word, const Depth& start) {
    Depth c = start;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        it->for_each([&](int i) { c = dot_reflect(spec.g, spec.lambda, c, i); });
    return c;
}

std::vector<WcfTerm> wcf_terms(const HovmSpec& spec, Setting setting) {
    const auto& holes = spec.holes.min_holes;
    if (setting == Setting::koszul && !pairwise_orthogonal(spec.g, holes))
        throw ValidationError("group-setting terms need pairwise orthogonal holes");
    if (setting == Setting::taylor && !spec.g.independent(integrability(spec.lambda)))
        throw ValidationError("semigroup-setting terms need an independent J_lambda");
    std::vector<WcfTerm> out;
    Depth zero(static_cast<std::size_t>(spec.g.rank()), 0);
    for (auto w : semigroup(holes.size())) {
        Depth weight;
        if (setting == Setting::koszul) {
            std::vector<NodeSet> word;
            for (std::size_t t = 0; t < holes.size(); ++t)
                if ((w.index >> t) & 1u) word.push_back(holes[t]);
            weight = hole_word_dot(spec, word, zero);
        } else {
            weight = semigroup_act(spec.g, spec.lambda, holes, w, SemigroupElement{});
        }
        out.push_back({w.length() % 2 ? -1 : 1, weight, w.length(), w.index});
    }
    std::stable_sort(out.begin(), out.end(), [](const WcfTerm& a, const WcfTerm& b) { return a.length < b.length; });
    return out;
}

bool sign_symmetry_check(const HovmSpec& spec) {
    const auto& holes = spec.holes.min_holes;
    if (!pairwise_orthogonal(spec.g, holes)) throw ValidationError("sign symmetry needs pairwise orthogonal holes");
    auto terms = wcf_terms(spec, Setting::koszul);
    std::map<std::uint32_t, Depth> by_index;
    std::map<Depth, long long> numerator;
    for (const auto& t : terms) {
        by_index[t.index] = t.weight;
        numerator[t.weight] += t.sign;
    }
    for (auto kel : semigroup(holes.size())) {
        std::vector<NodeSet> word;
        for (std::size_t t = 0; t < holes.size(); ++t)
            if ((kel.index >> t) & 1u) word.push_back(holes[t]);
        std::map<Depth, long long> moved;
        for (const auto& t : terms) {
            Depth img = hole_word_dot(spec, word, t.weight);
            if (img != by_index.at(kel.index ^ t.index)) return false;
            moved[img] += t.sign;
        }
        long long s = kel.length() % 2 ? -1 : 1;
        for (auto& [w, v] : numerator)
            if (moved[w] != s * v) return false;
        for (const auto& [w, v] : moved)
            if (v != 0 && numerator[w] * s != v) return false;
    }
    return true;
}

DihedralCandidate dihedral_candidate(const Gcm& g, const HighestWeight& lambda, NodeSet h1, NodeSet h2, int cutoff) {
    if (h1.intersects(h2)) throw ValidationError("dihedral candidate needs disjoint holes");
    if (h1.empty() || h2.empty()) throw ValidationError("dihedral candidate needs nonempty holes");
    HovmSpec spec = make_spec(g, lambda, {h1, h2});
    if (spec.holes.min_holes.size() != 2) throw ValidationError("dihedral candidate needs two minimal holes");
    DihedralCandidate out;
    out.order = order_of_hole_product(g, {h1, h2}, OrderMethod::direct);
    const NodeSet letter[2] = {h1, h2};
    Depth zero(static_cast<std::size_t>(g.rank()), 0);
    auto act = [&](const std::vector<int>& w) {
        std::vector<NodeSet> word;
        for (int a : w) word.push_back(letter[a - 1]);
        return hole_word_dot(spec, word, zero);
    };
    out.elements.push_back({{}, zero});
    for (long long t = 1; t <= out.order; ++t) {
        for (int first = 1; first <= 2; ++first) {
            std::vector<int> w;
            for (long long p = 0; p < t; ++p) w.push_back(((p % 2 == 0) == (first == 1)) ? 1 : 2);
            Depth wt = act(w);
            if (t == out.order && first == 2) {
                if (wt != out.elements.back().weight) throw ValidationError("longest dihedral words disagree");
                continue;
            }
            out.elements.push_back({w, wt});
        }
    }
    Character verma = verma_char(g, cutoff);
    out.euler = Character(g.rank(), cutoff);
    for (const auto& e : out.elements) {
        Character piece = verma.shift_by(e.weight);
        out.euler = out.euler + (e.word.size() % 2 ? piece.scaled(-1) : piece);
    }
    out.nonnegative = out.euler.nonnegative();
    out.support_matches = out.euler.support() == weight_set(spec, cutoff);
    return out;
}

}  // namespace hovm
