#ifndef SEMPLE_SERIES_HPP
#define SEMPLE_SERIES_HPP

#include <string>
#include <vector>

#include "semple/polynomial.hpp"
#include "semple/rational.hpp"

namespace semple {

/// Power series in the curve parameter s, truncated at a guaranteed order:
/// coefficients 0 .. order()-1 are exact, everything beyond is unknown (not
/// zero).  Every operation tracks the order that remains guaranteed; in
/// particular dividing by a series of valuation v costs v orders.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}

    static TruncatedSeries zero(int order) { return TruncatedSeries(std::vector<Rational>(order)); }

    /// Interpret a polynomial in s as a series with `order` known coefficients
    /// (terms of degree >= order are truncated away).
    static TruncatedSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return static_cast<int>(c_.size()); }

    /// Index of the lowest nonzero known coefficient; order() when every
    /// known coefficient vanishes (true valuation then only bounded below).
    int valuation() const;

    bool known_zero() const { return valuation() == order(); }

    const Rational& operator[](int i) const { return c_[i]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries scaled(const Rational& c) const;

    /// d/ds; one order of accuracy is consumed.
    TruncatedSeries derivative() const;

    /// Quotient of power series.  Requires valuation(divisor) <= valuation
    /// of this series; throws ZeroDivisor / NotDivisible / DivisionOrderLoss.
    TruncatedSeries divide_by(const TruncatedSeries& divisor) const;

    TruncatedSeries truncated(int order) const;

    /// Equality of the known coefficients up to `upto` orders (capped at the
    /// common guaranteed order).
    bool agrees_with(const TruncatedSeries& other, int upto) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// "0", "s^2", "(3/2)*s", "1 - 2*s + s^3"
    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// Evaluate a polynomial at series values for its variables.  Constants use
/// `fallback_order` when the assignment map alone cannot determine an order.
TruncatedSeries evaluate(const Polynomial& p,
                         const std::map<VarName, TruncatedSeries>& assignment,
                         int fallback_order);

} // namespace semple

#endif
