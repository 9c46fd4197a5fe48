#ifndef SEMPLE_TOWER_HPP
#define SEMPLE_TOWER_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "semple/chart_string.hpp"
#include "semple/rational.hpp"
#include "semple/varname.hpp"

namespace semple {

enum class StepKind { Regular, Critical };

inline const char* step_kind_name(StepKind k) {
    return k == StepKind::Regular ? "regular" : "critical";
}

/// The coordinate bookkeeping of one chart: the new and retained active
/// coordinates, the deactivated coordinate (absent on the base chart) and
/// the remaining inactive ones, all as canonical names.
///
/// On the base chart both of x1, x2 are active and neither designation is
/// forced; we store retained = x1, new = x2 there, a convention nothing
/// downstream depends on.  Level-1 steps are always Regular.
struct ChartFrame {
    ChartString chart;
    VarName new_coord;
    VarName retained_coord;
    std::optional<VarName> deactivated;
    std::vector<VarName> inactive; // canonical order, includes the deactivated one
    StepKind step_kind;
};

/// The k+2 non-redundant coordinates of a chart, in canonical order:
/// x1, x2, then the new coordinate introduced at each level.
std::vector<VarName> chart_coordinates(const ChartString& chart);

/// The coordinate introduced at the chart's top level (chart length >= 1).
VarName new_coordinate(const ChartString& chart);

ChartFrame chart_frame(const ChartString& chart);

/// Append a symbol; Regular iff the symbol repeats the last one (or the
/// chart is the base chart).
std::pair<ChartString, StepKind> child_chart(const ChartString& chart, int symbol);

ChartString project(const ChartString& chart, int levels);

/// A point of a chart given by rational values of its k+2 coordinates
/// (in chart_coordinates order).  The chart's origin is the node.
struct TowerPoint {
    ChartString chart;
    std::vector<Rational> coords;

    friend bool operator==(const TowerPoint&, const TowerPoint&) = default;
};

TowerPoint node_point(const ChartString& chart);
TowerPoint project(const TowerPoint& point, int levels);

/// The same geometric point in the sibling chart (last symbol flipped):
/// identical coordinates except the last one, which is inverted.
/// Throws LastCoordinateZero when the point lies in no other chart.
TowerPoint transition_last(const TowerPoint& point);

/// Every chart at the node's level containing the node, found by walking
/// the levels bottom-up and attempting the sibling transition at each one.
/// Returns a singleton for every label.
std::set<ChartString> charts_containing_node(const ChartString& label);

} // namespace semple

#endif
