#ifndef SEMPLE_BINOMIALS_HPP
#define SEMPLE_BINOMIALS_HPP

#include <string>
#include <utility>
#include <vector>

#include "semple/chart_string.hpp"
#include "semple/polynomial.hpp"
#include "semple/tower.hpp"
#include "semple/twig.hpp"

namespace semple {

/// The binomial alpha*n*r + beta*d attached to a chart, where n, r, d are
/// the chart's new, retained and deactivated coordinates.  The pair starts
/// at (1, 0) on the base chart (where the "binomial" is the monomial x1*x2)
/// and transforms as (a, b) -> (a, a+b) on a regular step and
/// (a, b) -> (a+b, a) on a critical one.
struct NodeBinomial {
    ChartString chart;
    long long alpha = 1;
    long long beta = 0;

    Polynomial polynomial() const;

    /// Textual form with the x1-coordinate printed first in each product,
    /// e.g. "3x1(212)x2(21)+2x1(2)"; the base chart renders "x1x2".
    std::string render() const;
};

NodeBinomial node_binomial(const ChartString& chart);

/// The defining equations of the prolonged family in one chart: the
/// binomials of all prefixes, the first one carrying the -t term.
struct IdealPresentation {
    ChartString chart;
    std::vector<Polynomial> generators; // size k+1
};

IdealPresentation ideal_generators(const ChartString& chart);

/// Re-derives the binomial of every prefix by implicit differentiation of
/// alpha*n*r + beta*d = 0 in the parent chart (the route that produces the
/// equations in the first place), and checks each result against the
/// recursion.  Returns the k+1 polynomials, without the -t term.
/// Throws MismatchWithRecursion if the two routes ever disagree.
std::vector<Polynomial> binomials_by_differentiation(const ChartString& chart);

enum class TwigRole { Retained, Emergent };

/// One coordinate axis of the central fiber in a chart: the affine
/// coordinate along it and the coordinates that vanish on it.
struct FiberComponent {
    TwigRole role;
    TwigLabel twig;
    VarName affine_coord;
    std::vector<VarName> vanishing;
};

/// The two components through the chart's node (chart length >= 1):
/// retained axis {n = 0, inactive = 0} and emergent axis {r = 0, inactive = 0}.
std::pair<FiberComponent, FiberComponent> central_fiber_components(const ChartString& chart);

/// Result of eliminating every deactivated coordinate from the generator
/// stack: a single relation unit * n^exp_new * r^exp_retained - t.
struct FlatLimit {
    Rational unit;
    long long exp_new = 0;
    long long exp_retained = 0;
    Polynomial relation;
};

/// Run the eliminations bottom-up and certify the monomial-minus-t shape of
/// the local presentation.  The exponents always equal (alpha, alpha+beta)
/// of the chart's binomial; EliminationFailed signals an implementation bug.
FlatLimit verify_flat_limit(const ChartString& chart);

} // namespace semple

#endif
