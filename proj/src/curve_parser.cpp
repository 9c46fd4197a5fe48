#include "semple/curve_parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "semple/errors.hpp"
#include "semple/tower.hpp"

namespace semple {

namespace {

struct Token {
    enum class Kind { Number, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, Assign, Semi, End };
    Kind kind;
    int line, col;
    Integer number;  // Number
    VarName var = VarName::s();
};

class Lexer {
public:
    Lexer(std::string_view text, VarPolicy policy) : text_(text), policy_(policy) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, line, col, 0};
        char c = text_[pos_];
        switch (c) {
        case '+': advance(); return {Token::Kind::Plus, line, col, 0};
        case '-': advance(); return {Token::Kind::Minus, line, col, 0};
        case '*': advance(); return {Token::Kind::Star, line, col, 0};
        case '/': advance(); return {Token::Kind::Slash, line, col, 0};
        case '^': advance(); return {Token::Kind::Caret, line, col, 0};
        case '(': advance(); return {Token::Kind::LParen, line, col, 0};
        case ')': advance(); return {Token::Kind::RParen, line, col, 0};
        case '=': advance(); return {Token::Kind::Assign, line, col, 0};
        case ';': advance(); return {Token::Kind::Semi, line, col, 0};
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                advance();
            }
            return {Token::Kind::Number, line, col, Integer(digits)};
        }
        if (c == 's') {
            advance();
            return {Token::Kind::Var, line, col, 0, VarName::s()};
        }
        if (c == 't') {
            if (policy_ == VarPolicy::SeriesOnly)
                throw ParseError(line, col, "only 's' may appear in a series expression");
            advance();
            return {Token::Kind::Var, line, col, 0, VarName::t()};
        }
        if (c == 'x') {
            if (policy_ == VarPolicy::SeriesOnly)
                throw ParseError(line, col, "only 's' may appear in a series expression");
            advance();
            if (pos_ >= text_.size() || (text_[pos_] != '1' && text_[pos_] != '2'))
                throw ParseError(line, col, "expected x1 or x2");
            int index = text_[pos_] - '0';
            advance();
            ChartString suffix;
            if (pos_ < text_.size() && text_[pos_] == '(') {
                advance();
                std::string body;
                while (pos_ < text_.size() && (text_[pos_] == '1' || text_[pos_] == '2')) {
                    body += text_[pos_];
                    advance();
                }
                if (pos_ >= text_.size() || text_[pos_] != ')')
                    throw ParseError(line_, col_, "unterminated coordinate name");
                advance();
                suffix = ChartString(body);
            }
            return {Token::Kind::Var, line, col, 0, VarName::tower(index, suffix)};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    VarPolicy policy_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, VarPolicy policy) : lexer_(text, policy) { shift(); }

    const Token& peek() const { return tok_; }

    void shift() { tok_ = lexer_.next(); }

    void expect(Token::Kind kind, const char* what) {
        if (tok_.kind != kind)
            throw ParseError(tok_.line, tok_.col, std::string("expected ") + what);
        shift();
    }

    Polynomial parse_expression() {
        bool negate = false;
        if (tok_.kind == Token::Kind::Plus) {
            shift();
        } else if (tok_.kind == Token::Kind::Minus) {
            negate = true;
            shift();
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            bool minus = tok_.kind == Token::Kind::Minus;
            shift();
            Polynomial rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

private:
    static bool starts_factor(Token::Kind k) {
        return k == Token::Kind::Number || k == Token::Kind::Var || k == Token::Kind::LParen;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            if (tok_.kind == Token::Kind::Star) {
                shift();
                acc *= parse_factor();
            } else if (starts_factor(tok_.kind)) {
                acc *= parse_factor(); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (tok_.kind == Token::Kind::Caret) {
            shift();
            if (tok_.kind != Token::Kind::Number)
                throw ParseError(tok_.line, tok_.col, "expected integer exponent");
            Integer e = tok_.number;
            shift();
            if (e < 0 || e > 512)
                throw ParseError(tok_.line, tok_.col, "exponent out of range");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial parse_base() {
        switch (tok_.kind) {
        case Token::Kind::Number: {
            Integer num = tok_.number;
            shift();
            if (tok_.kind == Token::Kind::Slash) {
                shift();
                if (tok_.kind != Token::Kind::Number)
                    throw ParseError(tok_.line, tok_.col, "expected denominator");
                Integer den = tok_.number;
                shift();
                if (den == 0) throw ParseError(tok_.line, tok_.col, "zero denominator");
                return Polynomial::constant(Rational(num, den));
            }
            return Polynomial::constant(Rational(num));
        }
        case Token::Kind::Var: {
            VarName v = tok_.var;
            shift();
            return Polynomial::variable(v);
        }
        case Token::Kind::LParen: {
            shift();
            Polynomial inner = parse_expression();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        default:
            throw ParseError(tok_.line, tok_.col, "expected a number, variable or '('");
        }
    }

    Lexer lexer_;
    Token tok_{Token::Kind::End, 1, 1, 0};
};

} // namespace

Polynomial parse_polynomial(std::string_view text, VarPolicy policy) {
    Parser parser(text, policy);
    Polynomial p = parser.parse_expression();
    if (parser.peek().kind != Token::Kind::End)
        throw ParseError(parser.peek().line, parser.peek().col, "trailing input");
    return p;
}

CurveSpec parse_curve_spec(std::string_view text) {
    // Assignments are lexed with coordinate names allowed on the left; the
    // right-hand sides may only involve s.
    Parser parser(text, VarPolicy::Coordinates);
    CurveSpec spec;
    std::map<VarName, std::pair<int, int>> positions;

    if (parser.peek().kind == Token::Kind::End)
        throw ParseError(1, 1, "expected an assignment");

    while (parser.peek().kind != Token::Kind::End) {
        Token head = parser.peek();
        if (head.kind != Token::Kind::Var || !head.var.is_tower())
            throw ParseError(head.line, head.col, "expected a coordinate name");
        parser.shift();
        parser.expect(Token::Kind::Assign, "'='");
        Polynomial rhs = parser.parse_expression();
        for (const VarName& v : rhs.variables())
            if (v != VarName::s())
                throw ParseError(head.line, head.col,
                                 "series for " + head.var.str() + " may only involve s");
        if (spec.assignments.count(head.var))
            throw ParseError(head.line, head.col, head.var.str() + " assigned twice");
        spec.assignments.emplace(head.var, std::move(rhs));
        positions.emplace(head.var, std::make_pair(head.line, head.col));

        if (parser.peek().kind == Token::Kind::Semi)
            parser.shift();
        else if (parser.peek().kind != Token::Kind::End)
            throw ParseError(parser.peek().line, parser.peek().col, "expected ';'");
    }

    // Chart inference: the deepest assigned coordinate pins the chart.
    ChartString chart;
    for (const auto& [v, p] : spec.assignments)
        if (v.level() > chart.size()) chart = v.suffix();
    spec.chart = chart;

    for (const VarName& v : chart_coordinates(chart)) {
        if (!spec.assignments.count(v))
            throw ParseError(1, 1, "missing coordinate " + v.str() + " of chart '" +
                                       chart.text() + "'");
    }
    if (spec.assignments.size() != chart.size() + 2) {
        for (const auto& [v, p] : spec.assignments) {
            bool known = false;
            for (const VarName& c : chart_coordinates(chart))
                if (c == v) known = true;
            if (!known)
                throw ParseError(positions[v].first, positions[v].second,
                                 v.str() + " is not a coordinate of chart '" + chart.text() + "'");
        }
    }
    return spec;
}

ParametricCurve curve_from_spec(const CurveSpec& spec, int order) {
    ParametricCurve curve;
    curve.chart = spec.chart;
    for (const VarName& v : chart_coordinates(spec.chart))
        curve.coords.push_back(TruncatedSeries::from_polynomial(spec.assignments.at(v), order));
    return curve;
}

} // namespace semple
