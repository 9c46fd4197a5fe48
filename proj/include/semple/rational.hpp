#ifndef SEMPLE_RATIONAL_HPP
#define SEMPLE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace semple {

// Exact arithmetic everywhere: no floating point in this library.
// cpp_rational keeps values reduced with a positive denominator, which is
// exactly the canonical form the rest of the code relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "7", "-7", "3/2", "-3/2"
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace semple

#endif
