#include "semple/curves.hpp"

#include <optional>

#include "semple/errors.hpp"

namespace semple {

const TruncatedSeries& ParametricCurve::coord(const VarName& v) const {
    std::vector<VarName> names = chart_coordinates(chart);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == v) return coords[i];
    throw Error(ErrorCode::InvalidArgument, v.str() + " is not a coordinate of this chart");
}

std::map<VarName, TruncatedSeries> ParametricCurve::coordinate_map() const {
    std::map<VarName, TruncatedSeries> out;
    std::vector<VarName> names = chart_coordinates(chart);
    for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], coords[i]);
    return out;
}

LiftResult lift_once(const ParametricCurve& curve) {
    if (curve.coords.size() != curve.chart.size() + 2)
        throw Error(ErrorCode::InvalidArgument, "curve has the wrong number of coordinates");

    // Active pair (retained first).  On the base chart neither coordinate is
    // distinguished yet; starting from x1 makes a tie retain x1.
    VarName rname = VarName::tower(1, {});
    VarName nname = VarName::tower(2, {});
    if (!curve.chart.empty()) {
        ChartFrame frame = chart_frame(curve.chart);
        rname = frame.retained_coord;
        nname = frame.new_coord;
    }

    TruncatedSeries dr = curve.coord(rname).derivative();
    TruncatedSeries dn = curve.coord(nname).derivative();
    std::optional<int> vr, vn;
    if (!dr.known_zero()) vr = dr.valuation();
    if (!dn.known_zero()) vn = dn.valuation();

    bool regular;
    if (!vr && !vn) {
        throw Error(ErrorCode::BothDerivativesZero,
                    "both active derivatives vanish to known order");
    } else if (vr && (!vn ? *vr <= dn.order() : *vr <= *vn)) {
        regular = true;
    } else if (vn && (!vr ? *vn < dr.order() : *vn < *vr)) {
        regular = false;
    } else {
        throw Error(ErrorCode::OrderExhausted, "cannot compare derivative valuations");
    }

    int q;
    if (curve.chart.empty())
        q = regular ? 1 : 2; // retain the coordinate with the smaller valuation
    else
        q = regular ? curve.chart.last() : opposite(curve.chart.last());

    TruncatedSeries fresh;
    try {
        fresh = regular ? dn.divide_by(dr) : dr.divide_by(dn);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DivisionOrderLoss)
            throw Error(ErrorCode::OrderExhausted, "series too short to divide");
        throw;
    }

    LiftResult out;
    out.curve.chart = curve.chart.child(q);
    out.curve.coords = curve.coords;
    out.curve.coords.push_back(std::move(fresh));
    out.step.symbol = q;
    out.step.kind = curve.chart.empty() ? StepKind::Regular
                                        : (regular ? StepKind::Regular : StepKind::Critical);
    return out;
}

ProlongResult prolong(const ParametricCurve& curve, int levels) {
    if (levels < 0) throw Error(ErrorCode::InvalidArgument, "levels must be >= 0");
    ProlongResult out;
    out.curve = curve;
    for (int i = 0; i < levels; ++i) {
        LiftResult lifted = lift_once(out.curve);
        out.curve = std::move(lifted.curve);
        out.steps.push_back(lifted.step);
    }
    return out;
}

bool check_identification(const ParametricCurve& a, const ParametricCurve& b,
                          const std::map<VarName, Polynomial>& dictionary) {
    std::map<VarName, TruncatedSeries> bmap = b.coordinate_map();
    int fallback = a.coords.empty() ? 0 : a.coords.front().order();

    for (const VarName& v : chart_coordinates(a.chart)) {
        auto it = dictionary.find(v);
        if (it == dictionary.end())
            throw Error(ErrorCode::InvalidArgument, "dictionary misses " + v.str());
        TruncatedSeries expected = evaluate(it->second, bmap, fallback);
        const TruncatedSeries& actual = a.coord(v);
        int n = std::min(expected.order(), actual.order());
        if (n <= 0)
            throw Error(ErrorCode::TruncationTooShort, "nothing left to compare for " + v.str());
        if (!actual.agrees_with(expected, n)) return false;
    }
    return true;
}

Polynomial total_derivative(const Polynomial& g) {
    Polynomial out;
    for (const VarName& v : g.variables()) {
        Polynomial step;
        if (v == VarName::t()) {
            continue; // the family parameter is a constant
        } else if (v == VarName::tower(1, {})) {
            step = Polynomial::constant(1);
        } else if (v == VarName::tower(2, {})) {
            step = Polynomial::variable(VarName::jet(1));
        } else if (v.kind() == VarName::Kind::Jet) {
            step = Polynomial::variable(VarName::jet(v.jet_order() + 1));
        } else {
            throw Error(ErrorCode::InvalidArgument,
                        v.str() + " is not a jet-system variable");
        }
        out += g.derivative(v) * step;
    }
    return out;
}

ImplicitSystem implicit_system(const Polynomial& f, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 0");
    ImplicitSystem sys;
    sys.equations.push_back(f);
    for (int i = 0; i < k; ++i) sys.equations.push_back(total_derivative(sys.equations.back()));
    return sys;
}

std::map<VarName, VarName> jet_to_regular_chart(int k) {
    std::map<VarName, VarName> out;
    ChartString ones;
    for (int j = 1; j <= k; ++j) {
        ones = ones.child(1);
        out.emplace(VarName::jet(j), VarName::tower(2, ones));
    }
    return out;
}

} // namespace semple
