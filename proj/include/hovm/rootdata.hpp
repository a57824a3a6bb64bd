#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hovm/core.hpp"

namespace hovm {

// Generalized Cartan matrix with a(i,j) = <alpha_j, alpha_i^vee>.
class Gcm {
public:
    Gcm() = default;
    explicit Gcm(std::vector<std::vector<int>> rows);  // validates the axioms

    int rank() const { return n_; }
    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    bool adjacent(int i, int j) const { return i != j && (*this)(i, j) != 0; }
    bool finite_type() const { return finite_; }
    std::vector<std::vector<int>> rows() const;
    const std::vector<int>& entries() const { return a_; }

    // connected components of the Dynkin graph restricted to `nodes`
    std::vector<NodeSet> components(NodeSet nodes) const;
    bool independent(NodeSet s) const;
    bool finite_type_on(NodeSet nodes) const;  // induced subdiagram is of finite type
    NodeSet all() const { return NodeSet::full(n_); }

    // classified type label of each component, e.g. "A2", "G2"; "?" if infinite
    std::vector<std::string> component_types() const;

    bool operator==(const Gcm& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::vector<int> a_;
    bool finite_ = false;
};

// "A5", "A1^2", "A1xB2", "A2^2 x G2"
Gcm parse_gcm(const std::string& spec);
Gcm cartan_matrix(char type, int rank);
Gcm submatrix(const Gcm& g, NodeSet nodes);  // nodes renumbered in increasing order

// subsets of `support` with edgeless induced subgraph, ascending lexicographic order
std::vector<NodeSet> independent_sets(const Gcm& g, NodeSet support, bool include_empty);

struct RootSystem {
    std::vector<Depth> positive_roots;  // sorted by height then lexicographic
    std::vector<NodeSet> components;
    std::vector<int> coxeter_numbers;   // per component
};

// real positive roots by reflection closure; throws ValidationError on infinite type
RootSystem positive_roots(const Gcm& g);

// reflection closure with a cap; returns false if the cap is exceeded
bool root_closure(const Gcm& g, std::size_t cap, std::vector<Depth>& out);

int coxeter_number(const Gcm& g, NodeSet component);

}  // namespace hovm
