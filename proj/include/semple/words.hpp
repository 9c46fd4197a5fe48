#ifndef SEMPLE_WORDS_HPP
#define SEMPLE_WORDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semple/chain.hpp"
#include "semple/chart_string.hpp"
#include "semple/twig.hpp"

namespace semple {

/// A stratum index: a word of length k whose i-th symbol is R or V_j.
/// Internally R is the subscript 0 and V_j the subscript j (j >= 2).
/// The admissible words start with R, and each later symbol is R, V at its
/// own position, or a repeat of the previous symbol.
class CodeWord {
public:
    CodeWord() = default;
    explicit CodeWord(std::vector<int> subscripts) : subs_(std::move(subscripts)) {}

    /// "RV2V3" -> word; syntax check only (see valid() for the rules).
    static std::optional<CodeWord> parse(std::string_view text);

    std::size_t size() const { return subs_.size(); }
    bool empty() const { return subs_.empty(); }
    /// 0-based position; returns 0 for R and j for V_j.
    int at(std::size_t i) const { return subs_[i]; }
    const std::vector<int>& subscripts() const { return subs_; }

    void append(int subscript) { subs_.push_back(subscript); }

    bool valid() const;

    std::string str() const;

    friend bool operator==(const CodeWord&, const CodeWord&) = default;
    friend auto operator<=>(const CodeWord&, const CodeWord&) = default;

private:
    std::vector<int> subs_;
};

/// All admissible words of length k, lexicographic (R before V_2 before V_3).
std::vector<CodeWord> enumerate_code_words(int k);

/// Subscript counts n_j (j = 2..k) of a word; the codimension of the
/// corresponding locus is their sum.
struct LocusSignature {
    int k = 0;
    std::vector<int> counts; // counts[j-2] = n_j

    int codimension() const;
    int count(int j) const { return counts[j - 2]; }

    friend bool operator==(const LocusSignature&, const LocusSignature&) = default;
};

LocusSignature locus_signature(const CodeWord& word);

/// True iff the locus of `inner` is contained in the locus of `outer`,
/// i.e. inner's subscript counts dominate outer's componentwise.
bool locus_contains(const CodeWord& outer, const CodeWord& inner);

/// Word of a twig on the level-k fiber: the node word of its label followed
/// by one R and then V_{j+2} repeated; end twigs are all R.
CodeWord twig_word(const TwigLabel& twig, int level);

/// Node word computed by merging the words of the node's two twigs
/// position by position (V beats R; differing V's cannot happen and throw
/// IncompatibleTwigWords).
CodeWord node_word_recursive(const ChartString& label);

/// Node word computed directly from the block decomposition of the label:
/// the initial block becomes R's, every later block starting at position j
/// becomes a block of V_j.
CodeWord node_word_explicit(const ChartString& label);

/// One level of the recursive node-word computation.
struct TraceStep {
    TwigLabel emergent;
    CodeWord emergent_word;
    TwigLabel retained;
    CodeWord retained_word;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct TraceLevel {
    int level = 0;
    ChartString node;
    CodeWord word;
    std::optional<TraceStep> step; // absent at level 0

    friend bool operator==(const TraceLevel&, const TraceLevel&) = default;
};

/// The full recursion record for one label: per level, the node prefix with
/// its word and the labels/words of the two twigs through it.
struct NodeWordTrace {
    ChartString label;
    std::vector<TraceLevel> levels; // levels 0..k
    CodeWord word;
};

NodeWordTrace trace_node_word(const ChartString& label);

/// A twig chain together with the node word of every node and the twig word
/// of every twig.
struct AnnotatedChain {
    TwigChain chain;
    std::vector<CodeWord> node_words;
    std::vector<CodeWord> twig_words;

    friend bool operator==(const AnnotatedChain&, const AnnotatedChain&) = default;
};

AnnotatedChain annotate_chain(const TwigChain& chain);

} // namespace semple

#endif
