#pragma once

#include <optional>
#include <vector>

#include "hovm/core.hpp"
#include "hovm/rootdata.hpp"

namespace hovm {

// Integer evaluation <lambda, alpha_i^vee>, or nullopt for a generic non-integral value.
// Non-integral values absorb integer shifts and are never compared with each other.
using CartanEval = std::optional<long long>;

inline bool dominant_integral(const CartanEval& e) { return e && *e >= 0; }

struct HighestWeight {
    std::vector<CartanEval> evals;
    int rank() const { return static_cast<int>(evals.size()); }
};

HighestWeight make_weight(const Gcm& g, std::vector<CartanEval> evals);

NodeSet integrability(const HighestWeight& lambda);

// <lambda - sum c_i alpha_i, alpha_j^vee>
CartanEval eval_at(const Gcm& g, const HighestWeight& lambda, const Depth& c, int j);

// evaluations of lambda - c as a new highest weight
HighestWeight shifted(const Gcm& g, const HighestWeight& lambda, const Depth& c);

// s_j . mu for mu = lambda - c; c may leave the nonnegative cone
Depth dot_reflect(const Gcm& g, const HighestWeight& lambda, const Depth& c, int j);

// depth of lambda_H: m_h = <lambda, alpha_h^vee> + 1 on H
Depth lambda_H(const Gcm& g, const HighestWeight& lambda, NodeSet h);

// w_S . mu where w_S is the longest element of W_S; needs integral evaluations on S
// and a finite-type subdiagram
Depth longest_dot(const Gcm& g, const HighestWeight& lambda, const Depth& c, NodeSet s);

struct Conjugate {
    std::vector<long long> evals;  // evaluations on every node of J (others untouched)
    std::vector<long long> shift;  // mu'' = mu + sum shift_j alpha_j, supported on J
};

// W_J-linear dominant representative of mu = lambda - c
Conjugate dominant_conjugate_J(const Gcm& g, const HighestWeight& lambda, const Depth& c, NodeSet j);

}  // namespace hovm
