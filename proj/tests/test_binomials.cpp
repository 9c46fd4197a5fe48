#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "semple/binomials.hpp"
#include "semple/chain.hpp"
#include "semple/errors.hpp"

using namespace semple;

namespace {

ChartString CS(const char* text) { return ChartString(text); }

std::vector<ChartString> charts_of_length(int k) {
    std::vector<ChartString> out = {ChartString{}};
    for (int j = 0; j < k; ++j) {
        std::vector<ChartString> next;
        for (const ChartString& s : out)
            for (int q : {1, 2}) next.push_back(s.child(q));
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("binomials render as in the length-3 table") {
    CHECK(node_binomial(ChartString{}).render() == "x1x2");
    CHECK(node_binomial(CS("1")).render() == "x1x2(1)+x2");
    CHECK(node_binomial(CS("2")).render() == "x1(2)x2+x1");
    CHECK(node_binomial(CS("11")).render() == "x1x2(11)+2x2(1)");
    CHECK(node_binomial(CS("12")).render() == "2x1(12)x2(1)+x1");
    CHECK(node_binomial(CS("21")).render() == "2x1(2)x2(21)+x2");
    CHECK(node_binomial(CS("22")).render() == "x1(22)x2+2x1(2)");
    CHECK(node_binomial(CS("111")).render() == "x1x2(111)+3x2(11)");
    CHECK(node_binomial(CS("112")).render() == "3x1(112)x2(11)+x1");
    CHECK(node_binomial(CS("121")).render() == "3x1(12)x2(121)+2x2(1)");
    CHECK(node_binomial(CS("122")).render() == "2x1(122)x2(1)+3x1(12)");
    CHECK(node_binomial(CS("211")).render() == "2x1(2)x2(211)+3x2(21)");
    CHECK(node_binomial(CS("212")).render() == "3x1(212)x2(21)+2x1(2)");
    CHECK(node_binomial(CS("221")).render() == "3x1(22)x2(221)+x2");
    CHECK(node_binomial(CS("222")).render() == "x1(222)x2+3x1(22)");
}

TEST_CASE("binomial recursion pairs") {
    CHECK(node_binomial(ChartString{}).alpha == 1);
    CHECK(node_binomial(ChartString{}).beta == 0);
    NodeBinomial b212 = node_binomial(CS("212"));
    CHECK(b212.alpha == 3);
    CHECK(b212.beta == 2);
    NodeBinomial b111 = node_binomial(CS("111"));
    CHECK(b111.alpha == 1);
    CHECK(b111.beta == 3);
}

TEST_CASE("binomial renders mirror under the symbol swap") {
    for (int k = 0; k <= 6; ++k) {
        for (const ChartString& chart : charts_of_length(k)) {
            NodeBinomial a = node_binomial(chart);
            NodeBinomial b = node_binomial(chart.swapped());
            CHECK(a.alpha == b.alpha);
            CHECK(a.beta == b.beta);
        }
    }
}

TEST_CASE("ideal generators per chart") {
    IdealPresentation ideal = ideal_generators(CS("212"));
    REQUIRE(ideal.generators.size() == 4);
    Polynomial x1 = Polynomial::variable(VarName::tower(1, {}));
    Polynomial x2 = Polynomial::variable(VarName::tower(2, {}));
    Polynomial t = Polynomial::variable(VarName::t());
    CHECK(ideal.generators[0] == x1 * x2 - t);
    CHECK(ideal.generators[1] == node_binomial(CS("2")).polynomial());
    CHECK(ideal.generators[2] == node_binomial(CS("21")).polynomial());
    CHECK(ideal.generators[3] == node_binomial(CS("212")).polynomial());

    CHECK(ideal_generators(ChartString{}).generators == std::vector<Polynomial>{x1 * x2 - t});

    IdealPresentation ideal11 = ideal_generators(CS("11"));
    REQUIRE(ideal11.generators.size() == 3);
    CHECK(ideal11.generators[2] == node_binomial(CS("11")).polynomial());
}

TEST_CASE("differentiation rederives the recursion") {
    std::vector<Polynomial> d21 = binomials_by_differentiation(CS("21"));
    CHECK(d21.back() == node_binomial(CS("21")).polynomial());
    std::vector<Polynomial> d1 = binomials_by_differentiation(CS("1"));
    CHECK(d1.back() == node_binomial(CS("1")).polynomial());

    for (const ChartString& chart : charts_of_length(3)) {
        std::vector<Polynomial> derived = binomials_by_differentiation(chart);
        REQUIRE(derived.size() == chart.size() + 1);
        for (std::size_t j = 0; j < derived.size(); ++j)
            CHECK(equal_up_to_positive_scale(derived[j],
                                             node_binomial(chart.prefix(j)).polynomial()));
    }
}

TEST_CASE("cross-method agreement for every chart of length <= 8") {
    for (int k = 0; k <= 8; ++k)
        for (const ChartString& chart : charts_of_length(k))
            CHECK_NOTHROW(binomials_by_differentiation(chart));
}

TEST_CASE("central fiber components") {
    auto [retained, emergent] = central_fiber_components(CS("212"));
    CHECK(retained.role == TwigRole::Retained);
    CHECK(retained.twig == TwigLabel::interior(CS("2")));
    CHECK(retained.affine_coord.str() == "x2(21)");
    REQUIRE(retained.vanishing.size() == 4);
    CHECK(retained.vanishing[0].str() == "x1(212)");
    CHECK(retained.vanishing[1].str() == "x1");
    CHECK(retained.vanishing[2].str() == "x2");
    CHECK(retained.vanishing[3].str() == "x1(2)");
    CHECK(emergent.twig == TwigLabel::interior(CS("21")));
    CHECK(emergent.affine_coord.str() == "x1(212)");
    CHECK(emergent.vanishing[0].str() == "x2(21)");

    auto [retained1, emergent1] = central_fiber_components(CS("1"));
    CHECK(retained1.twig == TwigLabel::left_end());
    CHECK(retained1.affine_coord.str() == "x1");
    CHECK(emergent1.affine_coord.str() == "x2(1)");
    CHECK(emergent1.twig == TwigLabel::interior(ChartString{}));

    auto [retained222, emergent222] = central_fiber_components(CS("222"));
    CHECK(retained222.twig == TwigLabel::right_end());

    CHECK_THROWS_AS(central_fiber_components(ChartString{}), Error);
}

TEST_CASE("flat limit elimination: small charts") {
    FlatLimit base = verify_flat_limit(ChartString{});
    CHECK(base.unit == 1);
    CHECK(base.exp_new == 1);
    CHECK(base.exp_retained == 1);

    FlatLimit one = verify_flat_limit(CS("1"));
    CHECK(one.exp_new == 1);
    CHECK(one.exp_retained == 2);
    CHECK(one.unit == -1);

    // fixed elimination order makes the unit deterministic:
    // -4*(-3/2)^3 = 27/2 after the three eliminations
    FlatLimit deep = verify_flat_limit(CS("212"));
    CHECK(deep.exp_new == 3);
    CHECK(deep.exp_retained == 5);
    CHECK(deep.unit == Rational(27, 2));
}

TEST_CASE("flat limit exponents equal the twig multiplicities, length <= 8") {
    for (int k = 0; k <= 8; ++k) {
        for (const ChartString& chart : charts_of_length(k)) {
            FlatLimit limit = verify_flat_limit(chart);
            NodeBinomial b = node_binomial(chart);
            CHECK(limit.exp_new == b.alpha);
            CHECK(limit.exp_retained == b.alpha + b.beta);
            CHECK(limit.unit != 0);
        }
    }
}

TEST_CASE("alpha and alpha+beta stay coprime, length <= 12") {
    for (int k = 0; k <= 12; ++k) {
        for (const ChartString& chart : charts_of_length(k)) {
            NodeBinomial b = node_binomial(chart);
            CHECK(std::gcd(b.alpha, b.alpha + b.beta) == 1);
        }
    }
}
