#include "hovm/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace hovm {

Gcm::Gcm(std::vector<std::vector<int>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ == 0) throw ValidationError("empty Cartan matrix");
    if (n_ > 32) throw ValidationError("rank above 32 is not supported");
    a_.reserve(static_cast<std::size_t>(n_ * n_));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n_) throw ValidationError("Cartan matrix is not square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
    for (int i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 2) throw ValidationError("Cartan matrix diagonal entry is not 2");
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            if ((*this)(i, j) > 0) throw ValidationError("positive off-diagonal Cartan entry");
            if (((*this)(i, j) == 0) != ((*this)(j, i) == 0))
                throw ValidationError("Cartan matrix zero pattern is not symmetric");
        }
    }
    std::vector<Depth> roots;
    finite_ = root_closure(*this, std::max<std::size_t>(static_cast<std::size_t>(n_ * n_), 120), roots);
}

std::vector<std::vector<int>> Gcm::rows() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return r;
}

std::vector<NodeSet> Gcm::components(NodeSet nodes) const {
    std::vector<NodeSet> out;
    NodeSet left = nodes;
    while (!left.empty()) {
        NodeSet comp;
        std::vector<int> stack{left.elements().front()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (comp.contains(v)) continue;
            comp.insert(v);
            left.for_each([&](int w) {
                if (!comp.contains(w) && adjacent(v, w)) stack.push_back(w);
            });
        }
        out.push_back(comp);
        left = left - comp;
    }
    return out;
}

bool Gcm::independent(NodeSet s) const {
    auto e = s.elements();
    for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = x + 1; y < e.size(); ++y)
            if (adjacent(e[x], e[y])) return false;
    return true;
}

bool Gcm::finite_type_on(NodeSet nodes) const {
    if (nodes.empty()) return true;
    if (nodes == all()) return finite_;
    return submatrix(*this, nodes).finite_type();
}

namespace {

int count_roots_on(const std::vector<Depth>& roots, NodeSet comp) {
    int k = 0;
    for (const auto& r : roots) {
        bool inside = true;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0 && !comp.contains(static_cast<int>(i))) inside = false;
        if (inside) ++k;
    }
    return k;
}

std::string classify(const Gcm& g, NodeSet comp, const std::vector<Depth>& roots) {
    int r = comp.size();
    int p = count_roots_on(roots, comp);
    auto e = comp.elements();
    bool simply_laced = true;
    for (int i : e)
        for (int j : e)
            if (i != j && g(i, j) < -1) simply_laced = false;
    auto name = [](char t, int k) { return std::string(1, t) + std::to_string(k); };
    if (simply_laced) {
        if (p == r * (r + 1) / 2) return name('A', r);
        if (r >= 4 && p == r * (r - 1)) return name('D', r);
        if (r == 6 && p == 36) return "E6";
        if (r == 7 && p == 63) return "E7";
        if (r == 8 && p == 120) return "E8";
        return "?";
    }
    if (r == 2) {
        int prod = g(e[0], e[1]) * g(e[1], e[0]);
        if (prod == 3) return "G2";
        if (prod == 2) return "B2";
        return "?";
    }
    if (r == 4 && p == 24) return "F4";
    if (p != r * r) return "?";
    for (int i : e)
        for (int j : e) {
            if (g(i, j) == -1 && g(j, i) == -2) {
                // alpha_i long, alpha_j short
                int deg = 0;
                for (int k : e)
                    if (g.adjacent(j, k)) ++deg;
                return name(deg == 1 ? 'B' : 'C', r);
            }
        }
    return "?";
}

}  // namespace

std::vector<std::string> Gcm::component_types() const {
    std::vector<std::string> out;
    for (NodeSet c : components(all())) {
        Gcm sub = submatrix(*this, c);
        std::vector<Depth> roots;
        if (!root_closure(sub, std::max<std::size_t>(static_cast<std::size_t>(sub.rank() * sub.rank()), 120), roots))
            out.emplace_back("?");
        else
            out.push_back(classify(sub, sub.all(), roots));
    }
    return out;
}

Gcm cartan_matrix(char type, int n) {
    if (n < 1) throw ValidationError("rank must be positive");
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
    for (int i = 0; i < n; ++i) set(i, i, 2);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            set(i, i + 1, -1);
            set(i + 1, i, -1);
        }
    };
    switch (type) {
    case 'A':
        chain(n);
        break;
    case 'B':
        if (n < 2) throw ValidationError("B_n needs n >= 2");
        chain(n);
        set(n - 1, n - 2, -2);
        break;
    case 'C':
        if (n < 2) throw ValidationError("C_n needs n >= 2");
        chain(n);
        set(n - 2, n - 1, -2);
        break;
    case 'D':
        if (n < 3) throw ValidationError("D_n needs n >= 3");
        chain(n - 1);
        set(n - 3, n - 1, -1);
        set(n - 1, n - 3, -1);
        break;
    case 'E': {
        if (n < 6 || n > 8) throw ValidationError("E_n needs 6 <= n <= 8");
        auto edge = [&](int i, int j) {
            set(i, j, -1);
            set(j, i, -1);
        };
        edge(0, 2);
        edge(1, 3);
        for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
        break;
    }
    case 'F':
        if (n != 4) throw ValidationError("F_n needs n = 4");
        chain(4);
        set(2, 1, -2);
        break;
    case 'G':
        if (n != 2) throw ValidationError("G_n needs n = 2");
        set(0, 1, -3);
        set(1, 0, -1);
        break;
    default:
        throw ValidationError(std::string("unknown Cartan type '") + type + "'");
    }
    return Gcm(std::move(a));
}

Gcm parse_gcm(const std::string& spec) {
    std::vector<std::pair<char, int>> factors;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
    };
    auto number = [&]() {
        skip();
        if (i >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[i])))
            throw ValidationError("malformed algebra type: " + spec);
        int v = 0;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
            v = v * 10 + (spec[i] - '0');
            if (v > 64) throw ValidationError("rank too large in algebra type: " + spec);
            ++i;
        }
        return v;
    };
    while (true) {
        skip();
        if (i >= spec.size()) throw ValidationError("malformed algebra type: " + spec);
        char t = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
        if (t < 'A' || t > 'G') throw ValidationError("malformed algebra type: " + spec);
        ++i;
        int r = number();
        int reps = 1;
        skip();
        if (i < spec.size() && spec[i] == '^') {
            ++i;
            reps = number();
            if (reps < 1) throw ValidationError("exponent must be positive: " + spec);
        }
        for (int k = 0; k < reps; ++k) factors.emplace_back(t, r);
        skip();
        if (i >= spec.size()) break;
        if (spec[i] == 'x' || spec[i] == '*' || spec[i] == '+') {
            ++i;
            continue;
        }
        throw ValidationError("malformed algebra type: " + spec);
    }
    int n = 0;
    for (auto [t, r] : factors) n += r;
    if (n > 32) throw ValidationError("total rank above 32 is not supported");
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    int off = 0;
    for (auto [t, r] : factors) {
        Gcm f = cartan_matrix(t, r);
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y) a[static_cast<std::size_t>(off + x)][static_cast<std::size_t>(off + y)] = f(x, y);
        off += r;
    }
    return Gcm(std::move(a));
}

Gcm submatrix(const Gcm& g, NodeSet nodes) {
    auto e = nodes.elements();
    std::vector<std::vector<int>> a;
    for (int i : e) {
        std::vector<int> row;
        for (int j : e) row.push_back(g(i, j));
        a.push_back(std::move(row));
    }
    return Gcm(std::move(a));
}

std::vector<NodeSet> independent_sets(const Gcm& g, NodeSet support, bool include_empty) {
    std::vector<NodeSet> out;
    for_each_subset(support, [&](NodeSet s) {
        if (s.empty() && !include_empty) return;
        if (g.independent(s)) out.push_back(s);
    });
    sort_sets(out);
    return out;
}

bool root_closure(const Gcm& g, std::size_t cap, std::vector<Depth>& out) {
    const int n = g.rank();
    // finite root systems have height at most max(2n, 29)
    const long height_cap = std::max(2 * n, 30);
    std::set<Depth> seen;
    std::deque<Depth> queue;
    for (int i = 0; i < n; ++i) {
        Depth a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i)] = 1;
        seen.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        Depth b = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            long pair = 0;  // <beta, alpha_i^vee>
            for (int j = 0; j < n; ++j) pair += static_cast<long>(g(i, j)) * b[static_cast<std::size_t>(j)];
            if (pair == 0) continue;
            long next = b[static_cast<std::size_t>(i)] - pair;
            if (next > height_cap) return false;
            Depth r = b;
            r[static_cast<std::size_t>(i)] = static_cast<int>(next);
            if (!nonnegative(r) || height(r) == 0) continue;
            if (height(r) > height_cap) return false;
            if (seen.insert(r).second) {
                if (seen.size() > cap) return false;
                queue.push_back(std::move(r));
            }
        }
    }
    out.assign(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const Depth& x, const Depth& y) { return height(x) < height(y); });
    return true;
}

int coxeter_number(const Gcm& g, NodeSet component) {
    Gcm sub = submatrix(g, component);
    std::vector<Depth> roots;
    if (!root_closure(sub, 200, roots)) throw ValidationError("Coxeter number of an infinite-type component");
    return 2 * static_cast<int>(roots.size()) / sub.rank();
}

RootSystem positive_roots(const Gcm& g) {
    if (!g.finite_type()) throw ValidationError("root system requested for infinite type");
    RootSystem rs;
    root_closure(g, 100000, rs.positive_roots);
    rs.components = g.components(g.all());
    for (NodeSet c : rs.components)
        rs.coxeter_numbers.push_back(2 * count_roots_on(rs.positive_roots, c) / c.size());
    return rs;
}

}  // namespace hovm
