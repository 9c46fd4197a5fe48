#include "semple/series.hpp"

#include <algorithm>
#include <sstream>

#include "semple/errors.hpp"

namespace semple {

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    std::vector<Rational> c(std::max(order, 0));
    for (const auto& [m, coeff] : p.terms()) {
        int deg = 0;
        for (const auto& [v, e] : m.factors()) {
            if (v != VarName::s())
                throw Error(ErrorCode::InvalidArgument, "series polynomial may only use s");
            deg = e;
        }
        if (deg < order) c[deg] = coeff;
    }
    return TruncatedSeries(std::move(c));
}

int TruncatedSeries::valuation() const {
    for (int i = 0; i < order(); ++i)
        if (c_[i] != 0) return i;
    return order();
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    int n = std::min(order(), other.order());
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) c[i] = c_[i] + other.c_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    int n = std::min(order(), other.order());
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) c[i] = c_[i] - other.c_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    // A term a_i * b_j with i + j = k is known whenever both factors are, or
    // one factor is a known zero; the guaranteed order below is exactly the
    // largest k for which every split satisfies that.
    int n = std::min(order() + other.valuation(), other.order() + valuation());
    std::vector<Rational> c(std::max(n, 0));
    for (int i = valuation(); i < order() && i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = other.valuation(); j < other.order() && i + j < n; ++j)
            c[i + j] += c_[i] * other.c_[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(const Rational& r) const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x *= r;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
    std::vector<Rational> c(std::max(order() - 1, 0));
    for (int i = 0; i + 1 < order(); ++i) c[i] = c_[i + 1] * (i + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::divide_by(const TruncatedSeries& divisor) const {
    int vb = divisor.valuation();
    if (vb == divisor.order())
        throw Error(ErrorCode::ZeroDivisor, "divisor is 0 to its known order");
    int n = std::min(order(), divisor.order()) - vb;
    if (n <= 0)
        throw Error(ErrorCode::DivisionOrderLoss, "no guaranteed coefficients in quotient");
    int va = valuation();
    if (va < vb)
        throw Error(ErrorCode::NotDivisible, "dividend valuation below divisor valuation");

    // Shift both down by vb; divisor now has a unit constant term.
    std::vector<Rational> q(n);
    for (int k = 0; k < n; ++k) {
        Rational acc = (k + vb < order()) ? c_[k + vb] : Rational(0);
        for (int i = 0; i < k; ++i) acc -= q[i] * divisor.c_[k - i + vb];
        q[k] = acc / divisor.c_[vb];
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    std::vector<Rational> c(c_.begin(), c_.begin() + std::min<std::size_t>(order, c_.size()));
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other, int upto) const {
    int n = std::min({order(), other.order(), upto});
    for (int i = 0; i < n; ++i)
        if (c_[i] != other.c_[i]) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < order(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
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
        bool need_coeff = (i == 0) || a != 1;
        if (need_coeff) out << (is_integer(a) ? to_string(a) : "(" + to_string(a) + ")");
        if (i > 0) {
            if (need_coeff) out << "*";
            out << "s";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

TruncatedSeries evaluate(const Polynomial& p,
                         const std::map<VarName, TruncatedSeries>& assignment,
                         int fallback_order) {
    int ambient = fallback_order;
    for (const auto& [v, s] : assignment) ambient = std::min(ambient, s.order());

    TruncatedSeries acc = TruncatedSeries::zero(ambient);
    for (const auto& [m, coeff] : p.terms()) {
        std::vector<Rational> unit(ambient);
        if (!unit.empty()) unit[0] = 1;
        TruncatedSeries term{std::move(unit)};
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error(ErrorCode::InvalidArgument, "no series assigned to " + v.str());
            for (int i = 0; i < e; ++i) term = term * it->second;
        }
        acc = acc + term.scaled(coeff);
    }
    return acc;
}

} // namespace semple
