#pragma once

#include <cstdint>
#include <vector>

#include "hovm/characters.hpp"
#include "hovm/hovm.hpp"

namespace hovm {

enum class Setting { koszul, taylor };

struct ResEntry {
    std::uint32_t index;  // subset of hole positions; bit t <=> H_{t+1}
    Depth weight;         // depth of the Verma highest weight
};

struct ResDiff {
    std::uint32_t source;  // level |source|
    std::uint32_t target;  // source minus one hole position
    int sign;
    Depth exponent;        // f-monomial exponent
};

struct Resolution {
    Setting setting;
    std::vector<NodeSet> holes;                  // H_1..H_k
    std::vector<std::vector<ResEntry>> levels;   // level t has |index| = t
    std::vector<ResDiff> differentials;
};

bool orthogonal(const Gcm& g, NodeSet a, NodeSet b);
bool pairwise_orthogonal(const Gcm& g, const std::vector<NodeSet>& holes);

Resolution koszul_resolution(const HovmSpec& spec);
Resolution taylor_resolution(const HovmSpec& spec);

struct ComplexReport {
    bool ok = true;
    std::string failure;
};
ComplexReport verify_complex_report(const Resolution& res, Exec ex = Exec::parallel);
bool verify_complex(const Resolution& res, Exec ex = Exec::parallel);

Character euler_char(const Gcm& g, const Resolution& res, int cutoff);

struct WcfTerm {
    int sign;
    Depth weight;
    int length;
    std::uint32_t index;
};
std::vector<WcfTerm> wcf_terms(const HovmSpec& spec, Setting setting);
// dot action of prod_{t in index} s_{H_t} on lambda, applied node by node
Depth hole_word_dot(const HovmSpec& spec, const std::vector<NodeSet>& word, const Depth& start);

bool sign_symmetry_check(const HovmSpec& spec);

struct DihedralElement {
    std::vector<int> word;  // letters 1, 2 for H_1, H_2; rightmost acts first
    Depth weight;
};
struct DihedralCandidate {
    long long order = 0;
    std::vector<DihedralElement> elements;
    Character euler;
    bool nonnegative = false;
    bool support_matches = false;
};
DihedralCandidate dihedral_candidate(const Gcm& g, const HighestWeight& lambda, NodeSet h1, NodeSet h2, int cutoff);

}  // namespace hovm
