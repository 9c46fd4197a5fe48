#ifndef SEMPLE_RENDER_HPP
#define SEMPLE_RENDER_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "semple/binomials.hpp"
#include "semple/curves.hpp"
#include "semple/words.hpp"

namespace semple {

struct ChainRenderOptions {
    bool words = false;
    bool multiplicities = false;
};

/// Three-row picture of the chain: nodes alternate between the top and
/// bottom rows (even positions low, odd high, as along the zigzag), twigs
/// sit between them on the middle row with the two ends at the outside.
std::string render_chain_ascii(const AnnotatedChain& chain, const ChainRenderOptions& options);

/// Undirected DOT graph: vertices are nodes (plus two terminal points for
/// the ends), edges are twigs; words and multiplicities go into labels.
std::string render_chain_dot(const AnnotatedChain& chain, const ChainRenderOptions& options);

/// {"level": k, "nodes": [{label, word}...],
///  "twigs": [{label | "left-end" | "right-end", word, multiplicity,
///             emergent_level (interior only)}...]}
nlohmann::json chain_to_json(const AnnotatedChain& chain);
AnnotatedChain chain_from_json(const nlohmann::json& j);

/// All binomials with chart prefixes up to the given length, ordered by
/// (length, lexicographic); lines "B(<chart>)=<binomial>".
std::string render_binomials_table(int level);
nlohmann::json binomials_to_json(const std::vector<NodeBinomial>& binomials);
std::string render_binomials_dot(int level);

std::string render_trace_ascii(const NodeWordTrace& trace);
nlohmann::json trace_to_json(const NodeWordTrace& trace);

std::string render_prolong_ascii(const ProlongResult& result);
nlohmann::json prolong_to_json(const ProlongResult& result);

std::vector<NodeBinomial> binomials_up_to(int level);

} // namespace semple

#endif
