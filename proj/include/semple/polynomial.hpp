#ifndef SEMPLE_POLYNOMIAL_HPP
#define SEMPLE_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semple/rational.hpp"
#include "semple/varname.hpp"

namespace semple {

/// Exponent vector of a single term: sorted (variable, exponent) pairs with
/// every exponent >= 1.  The empty vector is the constant monomial 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return {}; }
    static Monomial var(const VarName& v, int exponent = 1);

    Monomial times(const Monomial& other) const;
    int exponent_of(const VarName& v) const;
    /// Copy with the exponent of v replaced (0 removes the variable).
    Monomial with_exponent(const VarName& v, int exponent) const;
    int total_degree() const;
    bool is_one() const { return factors_.empty(); }

    const std::vector<std::pair<VarName, int>>& factors() const { return factors_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }

private:
    std::vector<std::pair<VarName, int>> factors_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// No zero coefficients are stored and terms are kept in a canonical order,
/// so structural equality is semantic equality.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return {}; }
    static Polynomial constant(Rational c);
    static Polynomial variable(const VarName& v);
    static Polynomial term(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    /// Value of a constant polynomial; throws InvalidArgument otherwise.
    Rational constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    std::set<VarName> variables() const;
    int degree_in(const VarName& v) const;
    int total_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int exponent) const;

    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    /// Formal partial derivative with respect to v.
    Polynomial derivative(const VarName& v) const;

    /// Replace every occurrence of v by q, fully expanded.
    Polynomial substitute(const VarName& v, const Polynomial& q) const;

    /// The positive rational multiple of this polynomial whose coefficients
    /// are coprime integers (sign pattern preserved).  Zero maps to zero.
    Polynomial primitive_part() const;

    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

/// Two polynomials equal up to multiplication by a positive rational
/// (in particular up to positive integer content).
bool equal_up_to_positive_scale(const Polynomial& a, const Polynomial& b);

/// Solve `relation` (required: degree 1 in `target` with a nonzero constant
/// coefficient) for `target` and substitute the solution into p.
/// Throws NotLinear / NonConstantCoefficient when the relation does not have
/// the required shape.
Polynomial solve_linear_and_eliminate(const Polynomial& relation, const VarName& target,
                                      const Polynomial& p);

} // namespace semple

#endif
