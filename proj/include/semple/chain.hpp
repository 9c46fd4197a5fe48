#ifndef SEMPLE_CHAIN_HPP
#define SEMPLE_CHAIN_HPP

#include <utility>
#include <vector>

#include "semple/chart_string.hpp"
#include "semple/twig.hpp"

namespace semple {

/// The central fiber at level k as a combinatorial chain: 2^k nodes in
/// lexicographic order, alternating with 2^k + 1 twigs.  Twig i sits to the
/// left of node i; the last twig is the right end.  Interior twigs are
/// labeled by the longest common prefix of their two nodes, carry the level
/// at which they emerge, and every twig carries its multiplicity.
struct TwigChain {
    int level = 0;
    std::vector<ChartString> nodes;
    std::vector<TwigLabel> twigs;
    std::vector<long long> multiplicities;
    std::vector<int> emergent_levels; // 0 for the two end twigs

    friend bool operator==(const TwigChain&, const TwigChain&) = default;
};

TwigChain build_chain(int level);

/// Per-twig multiplicities of a built chain, left to right.
std::vector<long long> multiplicities(const TwigChain& chain);

/// The multiplicities at one node: (retained, emergent) = (alpha, alpha+beta).
std::pair<long long, long long> node_multiplicities(const ChartString& chart);

/// Mediant-insertion sequence: start from (1, 1) and repeatedly insert the
/// sum between consecutive entries; length 2^k + 1.  An independent route to
/// the chain multiplicities.
std::vector<long long> multiplicity_sequence(int level);

} // namespace semple

#endif
