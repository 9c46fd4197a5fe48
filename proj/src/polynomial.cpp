#include "semple/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "semple/errors.hpp"

namespace semple {

Monomial Monomial::var(const VarName& v, int exponent) {
    Monomial m;
    if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (exponent > 0) m.factors_.push_back({v, exponent});
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return out;
}

int Monomial::exponent_of(const VarName& v) const {
    for (const auto& [name, e] : factors_)
        if (name == v) return e;
    return 0;
}

Monomial Monomial::with_exponent(const VarName& v, int exponent) const {
    Monomial out;
    bool placed = false;
    for (const auto& f : factors_) {
        if (f.first == v) {
            if (exponent > 0) out.factors_.push_back({v, exponent});
            placed = true;
        } else {
            out.factors_.push_back(f);
        }
    }
    if (!placed && exponent > 0) {
        out.factors_.push_back({v, exponent});
        std::sort(out.factors_.begin(), out.factors_.end());
    }
    return out;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [name, e] : factors_) d += e;
    return d;
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(const VarName& v) {
    Polynomial p;
    p.add_term(Monomial::var(v), 1);
    return p;
}

Polynomial Polynomial::term(Rational c, Monomial m) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Rational Polynomial::constant_value() const {
    if (is_zero()) return 0;
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant");
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarName> Polynomial::variables() const {
    std::set<VarName> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return vars;
}

int Polynomial::degree_in(const VarName& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
    return d;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
    Polynomial out = constant(1);
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

Polynomial Polynomial::derivative(const VarName& v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        out.add_term(m.with_exponent(v, e - 1), c * e);
    }
    return out;
}

Polynomial Polynomial::substitute(const VarName& v, const Polynomial& q) const {
    // Powers of q needed, computed once.
    std::vector<Polynomial> powers = {constant(1)};
    int maxe = degree_in(v);
    for (int e = 1; e <= maxe; ++e) powers.push_back(powers.back() * q);

    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) {
            out.add_term(m, c);
        } else {
            Polynomial rest = term(c, m.with_exponent(v, 0));
            out += rest * powers[e];
        }
    }
    return out;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) den_lcm = lcm(den_lcm, rational_den(c));
    Integer num_gcd = 0;
    for (const auto& [m, c] : terms_) num_gcd = gcd(num_gcd, Integer(rational_num(c) * (den_lcm / rational_den(c))));
    return scaled(Rational(den_lcm, num_gcd));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        bool need_coeff = m.is_one() || a != 1;
        if (need_coeff) out << (is_integer(a) ? to_string(a) : "(" + to_string(a) + ")");
        bool need_star = need_coeff;
        for (const auto& [v, e] : m.factors()) {
            if (need_star) out << "*";
            out << v.str();
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

bool equal_up_to_positive_scale(const Polynomial& a, const Polynomial& b) {
    return a.primitive_part() == b.primitive_part();
}

Polynomial solve_linear_and_eliminate(const Polynomial& relation, const VarName& target,
                                      const Polynomial& p) {
    if (relation.degree_in(target) != 1)
        throw Error(ErrorCode::NotLinear, "relation must be degree 1 in " + target.str());

    Polynomial lead;  // coefficient of target
    Polynomial rest;  // terms without target
    for (const auto& [m, c] : relation.terms()) {
        int e = m.exponent_of(target);
        if (e == 1) {
            lead += Polynomial::term(c, m.with_exponent(target, 0));
        } else {
            rest += Polynomial::term(c, m);
        }
    }
    if (!lead.is_constant())
        throw Error(ErrorCode::NonConstantCoefficient,
                    "coefficient of " + target.str() + " involves other variables");
    Rational c = lead.constant_value();
    // degree check guarantees a target term exists, so c != 0
    Polynomial solved = rest.scaled(Rational(-1) / c);
    return p.substitute(target, solved);
}

} // namespace semple
