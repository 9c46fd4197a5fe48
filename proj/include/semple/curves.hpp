#ifndef SEMPLE_CURVES_HPP
#define SEMPLE_CURVES_HPP

#include <map>
#include <utility>
#include <vector>

#include "semple/chart_string.hpp"
#include "semple/polynomial.hpp"
#include "semple/series.hpp"
#include "semple/tower.hpp"

namespace semple {

/// A parametrized curve germ inside one chart: one truncated series in s per
/// non-redundant coordinate, in chart_coordinates order.
struct ParametricCurve {
    ChartString chart;
    std::vector<TruncatedSeries> coords;

    const TruncatedSeries& coord(const VarName& v) const;
    std::map<VarName, TruncatedSeries> coordinate_map() const;

    friend bool operator==(const ParametricCurve&, const ParametricCurve&) = default;
};

struct LiftStep {
    int symbol = 0;
    StepKind kind = StepKind::Regular;
};

struct LiftResult {
    ParametricCurve curve;
    LiftStep step;
};

/// One prolongation step.  The new coordinate is the quotient of derivative
/// series d(other active)/d(chosen active); the active with the smaller
/// derivative valuation is retained (ties retained -> regular; at the base
/// level a tie retains x1).  Throws OrderExhausted when the truncation can
/// no longer decide or divide, BothDerivativesZero for a constant curve.
LiftResult lift_once(const ParametricCurve& curve);

struct ProlongResult {
    ParametricCurve curve;
    std::vector<LiftStep> steps;
};

ProlongResult prolong(const ParametricCurve& curve, int levels);

/// Check that curve `a` equals curve `b` after rewriting every coordinate of
/// a's chart through the dictionary (a polynomial in b's coordinates), with
/// the identity reparametrization.  Throws TruncationTooShort when no
/// guaranteed coefficients remain to compare.
bool check_identification(const ParametricCurve& a, const ParametricCurve& b,
                          const std::map<VarName, Polynomial>& dictionary);

/// Equations obtained by differentiating f(x1, x2) = 0 implicitly k times,
/// treating x2 and the jet variables y', y'', ... as functions of x1 (the
/// parameter t is constant).  Bridging to the all-regular chart renames
/// y^(j) to x2(11...1) with j ones; see jet_to_regular_chart.
struct ImplicitSystem {
    std::vector<Polynomial> equations; // f, Df, ..., D^k f
};

ImplicitSystem implicit_system(const Polynomial& f, int k);

/// The total-derivative operator D underlying implicit_system.
Polynomial total_derivative(const Polynomial& g);

/// Renaming map y^(j) -> x2(1^j), j = 1..k.
std::map<VarName, VarName> jet_to_regular_chart(int k);

} // namespace semple

#endif
