#ifndef SEMPLE_VARNAME_HPP
#define SEMPLE_VARNAME_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

#include "semple/chart_string.hpp"

namespace semple {

/// Name of a variable appearing in a polynomial:
///   - the family parameter t and the curve parameter s,
///   - a tower coordinate x1, x2, x1(2), x2(21), ... (index + chart suffix),
///   - a jet variable y', y'', ... used by the implicit-differentiation engine.
///
/// Tower names are resolved eagerly to their non-redundant representatives:
/// x1(...1) is the same coordinate as x1(...), so the trailing symbols equal
/// to the index are stripped on construction.  Structural equality of names
/// (and hence of polynomials) is then semantic equality.
///
/// Ordering: t < s < tower coordinates by (level, index, suffix) < jets.
class VarName {
public:
    enum class Kind : std::uint8_t { ParamT, ParamS, Tower, Jet };

    VarName() : VarName(Kind::ParamS, 0, {}, 0) {}

    static VarName t() { return VarName(Kind::ParamT, 0, {}, 0); }
    static VarName s() { return VarName(Kind::ParamS, 0, {}, 0); }

    static VarName tower(int index, ChartString suffix) {
        if (index != 1 && index != 2)
            throw std::invalid_argument("tower coordinate index must be 1 or 2");
        while (!suffix.empty() && suffix.last() == index) suffix = suffix.parent();
        return VarName(Kind::Tower, index, std::move(suffix), 0);
    }

    /// y^(order), order >= 1.
    static VarName jet(int order) {
        if (order < 1) throw std::invalid_argument("jet order must be >= 1");
        return VarName(Kind::Jet, 0, {}, order);
    }

    Kind kind() const { return kind_; }
    bool is_tower() const { return kind_ == Kind::Tower; }
    int index() const { return index_; }
    const ChartString& suffix() const { return suffix_; }
    std::size_t level() const { return suffix_.size(); }
    int jet_order() const { return jet_order_; }

    std::string str() const {
        switch (kind_) {
        case Kind::ParamT: return "t";
        case Kind::ParamS: return "s";
        case Kind::Tower:
            if (suffix_.empty()) return "x" + std::to_string(index_);
            return "x" + std::to_string(index_) + "(" + suffix_.text() + ")";
        case Kind::Jet:
            if (jet_order_ <= 3) return "y" + std::string(jet_order_, '\'');
            return "y^(" + std::to_string(jet_order_) + ")";
        }
        return {};
    }

    friend bool operator==(const VarName& a, const VarName& b) {
        return a.key() == b.key();
    }
    friend std::strong_ordering operator<=>(const VarName& a, const VarName& b) {
        return a.key() <=> b.key();
    }

private:
    VarName(Kind kind, int index, ChartString suffix, int jet_order)
        : kind_(kind), index_(index), suffix_(std::move(suffix)), jet_order_(jet_order) {}

    // (kind rank, level, index, suffix text, jet order)
    std::tuple<int, std::size_t, int, std::string, int> key() const {
        return {static_cast<int>(kind_), suffix_.size(), index_, suffix_.text(), jet_order_};
    }

    Kind kind_;
    int index_;
    ChartString suffix_;
    int jet_order_;
};

} // namespace semple

#endif
