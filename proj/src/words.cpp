#include "semple/words.hpp"

#include <algorithm>

#include "semple/errors.hpp"

namespace semple {

std::optional<CodeWord> CodeWord::parse(std::string_view text) {
    std::vector<int> subs;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == 'R') {
            subs.push_back(0);
            ++i;
        } else if (text[i] == 'V') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) return std::nullopt;
            int j = 0;
            for (std::size_t p = start; p < i; ++p) j = j * 10 + (text[p] - '0');
            if (j < 2) return std::nullopt;
            subs.push_back(j);
        } else {
            return std::nullopt;
        }
    }
    return CodeWord(std::move(subs));
}

bool CodeWord::valid() const {
    if (subs_.empty()) return false;
    if (subs_[0] != 0) return false;
    for (std::size_t i = 1; i < subs_.size(); ++i) {
        int a = subs_[i];
        if (a != 0 && a != static_cast<int>(i) + 1 && a != subs_[i - 1]) return false;
    }
    return true;
}

std::string CodeWord::str() const {
    std::string out;
    for (int a : subs_)
        out += (a == 0) ? "R" : "V" + std::to_string(a);
    return out;
}

std::vector<CodeWord> enumerate_code_words(int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "word length must be >= 1");
    if (k > 16) throw Error(ErrorCode::InvalidArgument, "enumeration above length 16 is too large");
    std::vector<CodeWord> words;
    std::vector<int> current = {0};
    auto extend = [&](auto&& self) -> void {
        if (current.size() == static_cast<std::size_t>(k)) {
            words.emplace_back(current);
            return;
        }
        int pos = static_cast<int>(current.size()) + 1;
        std::vector<int> choices = {0};
        if (current.back() != 0) choices.push_back(current.back());
        choices.push_back(pos);
        std::sort(choices.begin(), choices.end());
        choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
        for (int c : choices) {
            current.push_back(c);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);
    return words;
}

LocusSignature locus_signature(const CodeWord& word) {
    LocusSignature sig;
    sig.k = static_cast<int>(word.size());
    sig.counts.assign(std::max(sig.k - 1, 0), 0);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word.at(i) != 0) ++sig.counts[word.at(i) - 2];
    return sig;
}

int LocusSignature::codimension() const {
    int total = 0;
    for (int n : counts) total += n;
    return total;
}

bool locus_contains(const CodeWord& outer, const CodeWord& inner) {
    if (outer.size() != inner.size())
        throw Error(ErrorCode::InvalidArgument, "words must have equal length");
    LocusSignature a = locus_signature(outer);
    LocusSignature b = locus_signature(inner);
    for (std::size_t i = 0; i < a.counts.size(); ++i)
        if (b.counts[i] < a.counts[i]) return false;
    return true;
}

CodeWord twig_word(const TwigLabel& twig, int level) {
    if (twig.is_end()) return CodeWord(std::vector<int>(level, 0));
    int j = static_cast<int>(twig.label.size());
    if (j > level - 1)
        throw Error(ErrorCode::InvalidArgument, "twig label too long for the level");
    CodeWord word = node_word_recursive(twig.label);
    word.append(0);
    for (int i = 0; i < level - 1 - j; ++i) word.append(j + 2);
    return word;
}

CodeWord node_word_recursive(const ChartString& label) {
    if (label.empty()) return CodeWord{};
    int k = static_cast<int>(label.size());

    bool constant = true;
    for (int i = 1; i < k; ++i)
        if (label.symbol(i) != label.symbol(0)) constant = false;
    if (constant) return CodeWord(std::vector<int>(k, 0));

    CodeWord a = twig_word(emergent_twig_label(label), k);
    CodeWord b = twig_word(retained_twig_label(label), k);
    std::vector<int> merged(k);
    for (int i = 0; i < k; ++i) {
        int x = a.at(i), y = b.at(i);
        if (x == y)
            merged[i] = x;
        else if (x == 0)
            merged[i] = y;
        else if (y == 0)
            merged[i] = x;
        else
            throw Error(ErrorCode::IncompatibleTwigWords,
                        "twig words of " + label.text() + " disagree at position " +
                            std::to_string(i + 1));
    }
    return CodeWord(std::move(merged));
}

CodeWord node_word_explicit(const ChartString& label) {
    std::vector<int> subs;
    std::size_t i = 0;
    while (i < label.size()) {
        std::size_t start = i;
        while (i < label.size() && label.symbol(i) == label.symbol(start)) ++i;
        int subscript = (start == 0) ? 0 : static_cast<int>(start) + 1;
        for (std::size_t p = start; p < i; ++p) subs.push_back(subscript);
    }
    return CodeWord(std::move(subs));
}

NodeWordTrace trace_node_word(const ChartString& label) {
    NodeWordTrace trace;
    trace.label = label;
    for (std::size_t j = 0; j <= label.size(); ++j) {
        TraceLevel entry;
        entry.level = static_cast<int>(j);
        entry.node = label.prefix(j);
        entry.word = node_word_recursive(entry.node);
        if (j >= 1) {
            TraceStep step;
            step.emergent = emergent_twig_label(entry.node);
            step.emergent_word = twig_word(step.emergent, static_cast<int>(j));
            step.retained = retained_twig_label(entry.node);
            step.retained_word = twig_word(step.retained, static_cast<int>(j));
            entry.step = std::move(step);
        }
        trace.levels.push_back(std::move(entry));
    }
    trace.word = trace.levels.back().word;
    return trace;
}

AnnotatedChain annotate_chain(const TwigChain& chain) {
    AnnotatedChain out;
    out.chain = chain;
    for (const ChartString& node : chain.nodes)
        out.node_words.push_back(node_word_recursive(node));
    for (const TwigLabel& twig : chain.twigs)
        out.twig_words.push_back(twig_word(twig, chain.level));
    return out;
}

} // namespace semple
