#pragma once

#include <vector>

#include "hovm/characters.hpp"
#include "hovm/core.hpp"
#include "hovm/holes.hpp"
#include "hovm/weights.hpp"

namespace hovm {

bool is_sl2n(const Gcm& g);

// Highest weight module over sl2^n as C[f_1..f_n] modulo a monomial ideal.
struct MonomialModule {
    HighestWeight lambda;
    std::vector<Depth> generators;
    int cutoff = 0;
    int rank() const { return lambda.rank(); }
};

MonomialModule oracle_module(const HighestWeight& lambda, const std::vector<NodeSet>& holes, int cutoff);
std::vector<Depth> oracle_weights(const MonomialModule& m);
Character oracle_char(const MonomialModule& m);
HoleSet oracle_holes(const MonomialModule& m);

// character of the simple module L(lambda - mu) over sl2^n, in the frame of lambda
Character sl2n_simple_char(const HighestWeight& frame, const Depth& mu, int cutoff);

struct JhTerm {
    Depth weight;
    long long mult;
    bool operator==(const JhTerm&) const = default;
};

// composition factors from a character in the frame of `frame`
std::vector<JhTerm> oracle_jh(const HighestWeight& frame, const Character& ch);
std::vector<JhTerm> oracle_jh(const MonomialModule& m);

}  // namespace hovm
