#include "semple/chain.hpp"

#include "semple/binomials.hpp"
#include "semple/errors.hpp"

namespace semple {

namespace {

std::vector<ChartString> lexicographic_labels(int level) {
    std::vector<ChartString> labels = {ChartString{}};
    for (int j = 0; j < level; ++j) {
        std::vector<ChartString> next;
        next.reserve(labels.size() * 2);
        for (const ChartString& s : labels) {
            next.push_back(s.child(1));
            next.push_back(s.child(2));
        }
        labels = std::move(next);
    }
    return labels;
}

} // namespace

TwigChain build_chain(int level) {
    if (level < 0) throw Error(ErrorCode::InvalidArgument, "level must be >= 0");
    if (level > 20) throw Error(ErrorCode::InvalidArgument, "chain level too large");

    TwigChain chain;
    chain.level = level;
    chain.nodes = lexicographic_labels(level);

    const std::size_t n = chain.nodes.size();
    chain.twigs.push_back(TwigLabel::left_end());
    chain.emergent_levels.push_back(0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t lcp = chain.nodes[i - 1].common_prefix_length(chain.nodes[i]);
        chain.twigs.push_back(TwigLabel::interior(chain.nodes[i].prefix(lcp)));
        chain.emergent_levels.push_back(static_cast<int>(lcp) + 1);
    }
    chain.twigs.push_back(TwigLabel::right_end());
    chain.emergent_levels.push_back(0);

    // Multiplicities via the local pairs (alpha, alpha+beta) at each node,
    // with the shared interior twigs checked for agreement.
    chain.multiplicities.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto [retained_mult, emergent_mult] = node_multiplicities(chain.nodes[i]);
        std::size_t left = i, right = i + 1;

        std::size_t emergent_side;
        if (level == 0) {
            // Single node, two reduced end twigs.
            chain.multiplicities[left] = retained_mult;
            chain.multiplicities[right] = emergent_mult;
            continue;
        }
        TwigLabel emergent = emergent_twig_label(chain.nodes[i]);
        if (chain.twigs[left] == emergent)
            emergent_side = left;
        else if (chain.twigs[right] == emergent)
            emergent_side = right;
        else
            throw Error(ErrorCode::InconsistentChain,
                        "emergent twig of " + chain.nodes[i].text() + " not adjacent");
        std::size_t retained_side = (emergent_side == left) ? right : left;

        auto assign = [&](std::size_t t, long long m) {
            if (chain.multiplicities[t] == 0)
                chain.multiplicities[t] = m;
            else if (chain.multiplicities[t] != m)
                throw Error(ErrorCode::InconsistentChain,
                            "twig " + chain.twigs[t].str() + " assigned multiplicities " +
                                std::to_string(chain.multiplicities[t]) + " and " +
                                std::to_string(m));
        };
        assign(emergent_side, emergent_mult);
        assign(retained_side, retained_mult);
    }
    return chain;
}

std::vector<long long> multiplicities(const TwigChain& chain) { return chain.multiplicities; }

std::pair<long long, long long> node_multiplicities(const ChartString& chart) {
    NodeBinomial b = node_binomial(chart);
    return {b.alpha, b.alpha + b.beta};
}

std::vector<long long> multiplicity_sequence(int level) {
    if (level < 0) throw Error(ErrorCode::InvalidArgument, "level must be >= 0");
    if (level > 20) throw Error(ErrorCode::InvalidArgument, "level too large");
    std::vector<long long> seq = {1, 1};
    for (int j = 0; j < level; ++j) {
        std::vector<long long> next;
        next.reserve(seq.size() * 2 - 1);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            next.push_back(seq[i]);
            next.push_back(seq[i] + seq[i + 1]);
        }
        next.push_back(seq.back());
        seq = std::move(next);
    }
    return seq;
}

} // namespace semple
