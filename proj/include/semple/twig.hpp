#ifndef SEMPLE_TWIG_HPP
#define SEMPLE_TWIG_HPP

#include <compare>
#include <string>

#include "semple/chart_string.hpp"

namespace semple {

/// Identity of one irreducible component of the central fiber.  Interior
/// twigs are named by the chart string of the node they emerge from; the two
/// end components live outside that naming scheme and get dedicated markers.
struct TwigLabel {
    enum class Kind { LeftEnd, Interior, RightEnd };

    Kind kind = Kind::Interior;
    ChartString label; // interior only

    static TwigLabel left_end() { return {Kind::LeftEnd, {}}; }
    static TwigLabel right_end() { return {Kind::RightEnd, {}}; }
    static TwigLabel interior(ChartString s) { return {Kind::Interior, std::move(s)}; }

    bool is_end() const { return kind != Kind::Interior; }

    /// "T(21)", "T()", "left-end", "right-end"
    std::string str() const {
        switch (kind) {
        case Kind::LeftEnd: return "left-end";
        case Kind::RightEnd: return "right-end";
        case Kind::Interior: return "T(" + label.text() + ")";
        }
        return {};
    }

    /// Mirror image under the 1 <-> 2 symbol swap.
    TwigLabel swapped() const {
        switch (kind) {
        case Kind::LeftEnd: return right_end();
        case Kind::RightEnd: return left_end();
        case Kind::Interior: return interior(label.swapped());
        }
        return {};
    }

    friend bool operator==(const TwigLabel&, const TwigLabel&) = default;
    friend auto operator<=>(const TwigLabel&, const TwigLabel&) = default;
};

/// The twig emerging at the top level of the given chart (chart length >= 1):
/// it connects the chart's node with its sibling node.
inline TwigLabel emergent_twig_label(const ChartString& chart) {
    return TwigLabel::interior(chart.parent());
}

/// The other twig through the chart's node, the one mapped isomorphically
/// one level down.  For a run-terminated string p1..p_{j-1} p_j q q .. q
/// (q = opposite of p_j) this is the interior twig T(p1..p_{j-1}); for a
/// constant string it is the corresponding end component.
inline TwigLabel retained_twig_label(const ChartString& chart) {
    std::size_t k = chart.size();
    int lastsym = chart.last();
    std::size_t run = 1;
    while (run < k && chart.symbol(k - run - 1) == lastsym) ++run;
    if (run == k) return lastsym == 1 ? TwigLabel::left_end() : TwigLabel::right_end();
    std::size_t j = k - run; // position (1-based) of the symbol preceding the run
    return TwigLabel::interior(chart.prefix(j - 1));
}

} // namespace semple

#endif
