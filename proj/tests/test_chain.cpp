#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "semple/chain.hpp"
#include "semple/errors.hpp"

using namespace semple;

namespace {
ChartString CS(const char* text) { return ChartString(text); }

// Mediant insertion written out again, test-side.
std::vector<long long> insertion_oracle(int k) {
    std::vector<long long> seq = {1, 1};
    for (int i = 0; i < k; ++i) {
        std::vector<long long> next;
        for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
            next.push_back(seq[j]);
            next.push_back(seq[j] + seq[j + 1]);
        }
        next.push_back(seq.back());
        seq = next;
    }
    return seq;
}
} // namespace

TEST_CASE("chain layout at level 3") {
    TwigChain chain = build_chain(3);
    REQUIRE(chain.nodes.size() == 8);
    REQUIRE(chain.twigs.size() == 9);
    CHECK(chain.nodes.front() == CS("111"));
    CHECK(chain.nodes.back() == CS("222"));
    CHECK(std::is_sorted(chain.nodes.begin(), chain.nodes.end()));

    std::vector<TwigLabel> expected = {
        TwigLabel::left_end(),          TwigLabel::interior(CS("11")),
        TwigLabel::interior(CS("1")),   TwigLabel::interior(CS("12")),
        TwigLabel::interior(ChartString{}), TwigLabel::interior(CS("21")),
        TwigLabel::interior(CS("2")),   TwigLabel::interior(CS("22")),
        TwigLabel::right_end()};
    CHECK(chain.twigs == expected);

    // interior twig T(w) emerges at level |w|+1
    CHECK(chain.emergent_levels ==
          std::vector<int>{0, 3, 2, 3, 1, 3, 2, 3, 0});
}

TEST_CASE("chain at levels 0 and 1") {
    TwigChain base = build_chain(0);
    CHECK(base.nodes == std::vector<ChartString>{ChartString{}});
    CHECK(base.twigs == std::vector<TwigLabel>{TwigLabel::left_end(), TwigLabel::right_end()});
    CHECK(base.multiplicities == std::vector<long long>{1, 1});

    TwigChain one = build_chain(1);
    CHECK(one.nodes == std::vector<ChartString>{CS("1"), CS("2")});
    CHECK(one.twigs == std::vector<TwigLabel>{TwigLabel::left_end(),
                                              TwigLabel::interior(ChartString{}),
                                              TwigLabel::right_end()});
    CHECK(one.emergent_levels == std::vector<int>{0, 1, 0});
}

TEST_CASE("multiplicities at a node and along the chain") {
    auto [retained, emergent] = node_multiplicities(CS("212"));
    CHECK(retained == 3);
    CHECK(emergent == 5);

    TwigChain chain2 = build_chain(2);
    CHECK(chain2.multiplicities == std::vector<long long>{1, 3, 2, 3, 1});

    for (int k = 0; k <= 6; ++k) {
        TwigChain chain = build_chain(k);
        CHECK(chain.multiplicities.front() == 1);
        CHECK(chain.multiplicities.back() == 1);
    }
}

TEST_CASE("mediant sequence tables") {
    CHECK(multiplicity_sequence(0) == std::vector<long long>{1, 1});
    CHECK(multiplicity_sequence(1) == std::vector<long long>{1, 2, 1});
    CHECK(multiplicity_sequence(2) == std::vector<long long>{1, 3, 2, 3, 1});
    CHECK(multiplicity_sequence(3) == std::vector<long long>{1, 4, 3, 5, 2, 5, 3, 4, 1});

    std::vector<long long> m5 = multiplicity_sequence(5);
    CHECK(m5 == insertion_oracle(5));
    REQUIRE(m5.size() == 33);
    CHECK(m5[16] == 2); // center
    std::vector<long long> reversed(m5.rbegin(), m5.rend());
    CHECK(m5 == reversed);
}

TEST_CASE("the two multiplicity computations agree for k <= 10") {
    for (int k = 0; k <= 10; ++k)
        CHECK(multiplicities(build_chain(k)) == multiplicity_sequence(k));
}

TEST_CASE("symbol swap reverses the chain and keeps multiplicities") {
    std::mt19937_64 rng{4242};
    std::uniform_int_distribution<int> kdist(0, 10);
    for (int i = 0; i < 60; ++i) {
        int k = kdist(rng);
        TwigChain chain = build_chain(k);
        std::size_t n = chain.nodes.size();
        for (std::size_t j = 0; j < n; ++j)
            CHECK(chain.nodes[j].swapped() == chain.nodes[n - 1 - j]);
        std::size_t tn = chain.twigs.size();
        for (std::size_t t = 0; t < tn; ++t) {
            CHECK(chain.twigs[t].swapped() == chain.twigs[tn - 1 - t]);
            CHECK(chain.multiplicities[t] == chain.multiplicities[tn - 1 - t]);
        }
    }
}

TEST_CASE("the twig emerging in a chart joins the two sibling nodes") {
    for (int k = 1; k <= 6; ++k) {
        TwigChain chain = build_chain(k);
        for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
            const ChartString& node = chain.nodes[i];
            TwigLabel emergent = emergent_twig_label(node);
            // find the twig and confirm its neighbours
            for (std::size_t t = 1; t + 1 < chain.twigs.size(); ++t) {
                if (chain.twigs[t] != emergent) continue;
                const ChartString& left = chain.nodes[t - 1];
                const ChartString& right = chain.nodes[t];
                if (left != node && right != node) continue;
                CHECK(left == right.flipped_last());
            }
        }
    }
}
