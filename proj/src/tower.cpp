#include "semple/tower.hpp"

#include "semple/errors.hpp"

namespace semple {

std::vector<VarName> chart_coordinates(const ChartString& chart) {
    std::vector<VarName> coords = {VarName::tower(1, {}), VarName::tower(2, {})};
    for (std::size_t j = 1; j <= chart.size(); ++j)
        coords.push_back(VarName::tower(opposite(chart.symbol(j - 1)), chart.prefix(j)));
    return coords;
}

VarName new_coordinate(const ChartString& chart) {
    if (chart.empty())
        throw Error(ErrorCode::InvalidArgument, "base chart introduces no coordinate");
    return VarName::tower(opposite(chart.last()), chart);
}

ChartFrame chart_frame(const ChartString& chart) {
    ChartFrame frame;
    frame.chart = chart;
    if (chart.empty()) {
        frame.retained_coord = VarName::tower(1, {});
        frame.new_coord = VarName::tower(2, {});
        frame.step_kind = StepKind::Regular;
        return frame;
    }
    int q = chart.last();
    frame.new_coord = new_coordinate(chart);
    frame.retained_coord = VarName::tower(q, chart); // resolves to the canonical name
    frame.deactivated = VarName::tower(opposite(q), chart.parent());
    frame.step_kind = (chart.size() == 1 || chart.symbol(chart.size() - 2) == q)
                          ? StepKind::Regular
                          : StepKind::Critical;
    for (const VarName& v : chart_coordinates(chart))
        if (v != frame.new_coord && v != frame.retained_coord) frame.inactive.push_back(v);
    return frame;
}

std::pair<ChartString, StepKind> child_chart(const ChartString& chart, int symbol) {
    if (symbol != 1 && symbol != 2)
        throw Error(ErrorCode::InvalidArgument, "chart symbol must be 1 or 2");
    StepKind kind = (chart.empty() || chart.last() == symbol) ? StepKind::Regular
                                                              : StepKind::Critical;
    return {chart.child(symbol), kind};
}

ChartString project(const ChartString& chart, int levels) {
    if (levels < 0 || static_cast<std::size_t>(levels) > chart.size())
        throw Error(ErrorCode::InvalidArgument, "cannot project below the base");
    return chart.prefix(chart.size() - levels);
}

TowerPoint node_point(const ChartString& chart) {
    return {chart, std::vector<Rational>(chart.size() + 2)};
}

TowerPoint project(const TowerPoint& point, int levels) {
    TowerPoint out;
    out.chart = project(point.chart, levels);
    out.coords.assign(point.coords.begin(), point.coords.end() - levels);
    return out;
}

TowerPoint transition_last(const TowerPoint& point) {
    if (point.chart.empty())
        throw Error(ErrorCode::InvalidArgument, "base chart has no sibling");
    if (point.coords.back() == 0)
        throw Error(ErrorCode::LastCoordinateZero,
                    "point lies only in chart " + point.chart.text());
    TowerPoint out;
    out.chart = point.chart.flipped_last();
    out.coords = point.coords;
    out.coords.back() = Rational(1) / out.coords.back();
    return out;
}

std::set<ChartString> charts_containing_node(const ChartString& label) {
    // Walk the projections bottom-up.  At each level the node's projection is
    // the origin of the corresponding prefix chart; the only other candidate
    // chart at that level is the sibling, reachable exactly when the sibling
    // transition succeeds.  Collecting the charts reached this way at the top
    // level gives every chart containing the node.
    std::set<ChartString> reached = {ChartString{}};
    for (std::size_t j = 1; j <= label.size(); ++j) {
        std::set<ChartString> next;
        for (const ChartString& prefix : reached) {
            if (prefix != label.prefix(j - 1)) {
                // A projection visible in a non-prefix chart would need atlas
                // transition functions to lift; the walk never produces one.
                throw Error(ErrorCode::InvalidArgument,
                            "unexpected non-prefix chart in node search");
            }
            TowerPoint here = node_point(label.prefix(j));
            next.insert(here.chart);
            try {
                next.insert(transition_last(here).chart);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::LastCoordinateZero) throw;
            }
        }
        reached = std::move(next);
    }
    return reached;
}

} // namespace semple
