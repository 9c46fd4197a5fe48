#ifndef SEMPLE_CHART_STRING_HPP
#define SEMPLE_CHART_STRING_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semple {

/// The symbol opposite to 1 is 2 and vice versa.
inline int opposite(int symbol) { return 3 - symbol; }

/// A word over the alphabet {1, 2}.  The empty word names the base chart;
/// a word of length k names a chart (or the origin node) at level k.
/// Lexicographic comparison of equal-length words matches the node order
/// along the central-fiber chain.
class ChartString {
public:
    ChartString() = default;

    explicit ChartString(std::string_view text) {
        for (char c : text) {
            if (c != '1' && c != '2')
                throw std::invalid_argument("chart string may contain only '1' and '2'");
        }
        text_.assign(text.begin(), text.end());
    }

    static std::optional<ChartString> parse(std::string_view text) {
        for (char c : text)
            if (c != '1' && c != '2') return std::nullopt;
        ChartString s;
        s.text_.assign(text.begin(), text.end());
        return s;
    }

    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }

    /// Symbol at 0-based position i, as the integer 1 or 2.
    int symbol(std::size_t i) const { return text_[i] - '0'; }
    int last() const { return text_.back() - '0'; }

    ChartString prefix(std::size_t len) const {
        ChartString s;
        s.text_ = text_.substr(0, len);
        return s;
    }

    ChartString parent() const { return prefix(text_.size() - 1); }

    ChartString child(int symbol) const {
        ChartString s;
        s.text_ = text_ + static_cast<char>('0' + symbol);
        return s;
    }

    /// Swap 1 <-> 2 in every position.
    ChartString swapped() const {
        ChartString s;
        s.text_ = text_;
        for (char& c : s.text_) c = (c == '1') ? '2' : '1';
        return s;
    }

    /// The sibling word: same prefix, last symbol flipped.
    ChartString flipped_last() const {
        ChartString s;
        s.text_ = text_;
        s.text_.back() = (s.text_.back() == '1') ? '2' : '1';
        return s;
    }

    /// Length of the longest common prefix with another word.
    std::size_t common_prefix_length(const ChartString& other) const {
        std::size_t n = 0;
        while (n < size() && n < other.size() && text_[n] == other.text_[n]) ++n;
        return n;
    }

    const std::string& text() const { return text_; }

    auto operator<=>(const ChartString&) const = default;

private:
    std::string text_;
};

inline std::string node_label(const ChartString& chart) { return "N(" + chart.text() + ")"; }

} // namespace semple

#endif
