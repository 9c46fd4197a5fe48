#ifndef SEMPLE_CURVE_PARSER_HPP
#define SEMPLE_CURVE_PARSER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "semple/curves.hpp"
#include "semple/polynomial.hpp"

namespace semple {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Which variables an expression may mention.
enum class VarPolicy {
    SeriesOnly,   // s
    Coordinates,  // s, t, x1, x2, x1(...), x2(...)
};

/// Parse a polynomial expression: `+`/`-` separated terms of juxtaposed or
/// `*`-joined factors, `^` for powers, rational literals as p/q, parentheses
/// for grouping, whitespace-insensitive.  Throws ParseError with position.
Polynomial parse_polynomial(std::string_view text, VarPolicy policy);

/// A parsed curve file: `name = expr` assignments separated by `;`.
/// The chart is inferred from the assigned coordinate names, which must be
/// exactly the coordinate set of one chart.
struct CurveSpec {
    ChartString chart;
    std::map<VarName, Polynomial> assignments;
};

CurveSpec parse_curve_spec(std::string_view text);

/// Materialize the parsed series at a fixed truncation order.
ParametricCurve curve_from_spec(const CurveSpec& spec, int order);

} // namespace semple

#endif
