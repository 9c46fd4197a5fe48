#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "semple/render.hpp"

using namespace semple;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("cannot open " + path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string golden(const std::string& name) {
    return slurp(std::string(SEMPLE_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_CASE("binomial table matches the golden file byte for byte") {
    CHECK(render_binomials_table(3) == golden("binomials_level3.txt"));
}

TEST_CASE("annotated chain matches the golden file byte for byte") {
    AnnotatedChain ac = annotate_chain(build_chain(3));
    CHECK(render_chain_ascii(ac, {.words = true, .multiplicities = false}) ==
          golden("chain3_words.txt"));
    CHECK(render_chain_ascii(ac, {.words = true, .multiplicities = true}) ==
          golden("chain3_words_mults.txt"));
}

TEST_CASE("ascii chain basics") {
    AnnotatedChain base = annotate_chain(build_chain(0));
    std::string picture = render_chain_ascii(base, {});
    CHECK(picture.find("N()") != std::string::npos);
    CHECK(picture.find("left-end") != std::string::npos);
    CHECK(picture.find("right-end") != std::string::npos);

    // high row carries the odd nodes, low row the even ones
    AnnotatedChain one = annotate_chain(build_chain(1));
    std::string two_nodes = render_chain_ascii(one, {});
    auto high = two_nodes.find("N(2)");
    auto low = two_nodes.find("N(1)");
    CHECK(high < low);
}

TEST_CASE("json round-trips the chain") {
    for (int k = 0; k <= 6; ++k) {
        AnnotatedChain ac = annotate_chain(build_chain(k));
        nlohmann::json j = chain_to_json(ac);
        CHECK(chain_from_json(j) == ac);
        // and through the serialized text
        nlohmann::json reparsed = nlohmann::json::parse(j.dump());
        CHECK(chain_from_json(reparsed) == ac);
    }
}

TEST_CASE("json schema fields") {
    AnnotatedChain ac = annotate_chain(build_chain(2));
    nlohmann::json j = chain_to_json(ac);
    CHECK(j["level"] == 2);
    REQUIRE(j["nodes"].size() == 4);
    CHECK(j["nodes"][0]["label"] == "11");
    CHECK(j["nodes"][0]["word"] == "RR");
    REQUIRE(j["twigs"].size() == 5);
    CHECK(j["twigs"][0]["label"] == "left-end");
    CHECK(j["twigs"][0]["multiplicity"] == 1);
    CHECK_FALSE(j["twigs"][0].contains("emergent_level"));
    CHECK(j["twigs"][1]["label"] == "1");
    CHECK(j["twigs"][1]["multiplicity"] == 3);
    CHECK(j["twigs"][1]["emergent_level"] == 2);
    CHECK(j["twigs"][2]["label"] == "");
    CHECK(j["twigs"][2]["multiplicity"] == 2);
}

TEST_CASE("dot output is a graph with the right labels") {
    AnnotatedChain ac = annotate_chain(build_chain(2));
    std::string dot = render_chain_dot(ac, {.words = true, .multiplicities = true});
    CHECK(dot.rfind("graph chain {", 0) == 0);
    CHECK(dot.find("n0 -- n1") != std::string::npos);
    CHECK(dot.find("end_l -- n0") != std::string::npos);
    CHECK(dot.find("n3 -- end_r") != std::string::npos);
    CHECK(dot.find("T(1)*3=RR") != std::string::npos);
    CHECK(dot.find("T()*2=RV2") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

    std::string tree = render_binomials_dot(2);
    CHECK(tree.rfind("graph binomials {", 0) == 0);
    CHECK(tree.find("b -- b1") != std::string::npos);
    CHECK(tree.find("x1x2(1)+x2") != std::string::npos);
}

TEST_CASE("trace table") {
    std::string table = render_trace_ascii(trace_node_word(ChartString("212")));
    CHECK(table.find("N(212)") != std::string::npos);
    CHECK(table.find("RV2V3") != std::string::npos);
    CHECK(table.find("T(21)=RV2R") != std::string::npos);
    CHECK(table.find("right-end=R") != std::string::npos);
}

TEST_CASE("prolong rendering") {
    ProlongResult result;
    result.curve.chart = ChartString("1");
    result.curve.coords = {
        TruncatedSeries::from_polynomial(Polynomial::variable(VarName::s()).pow(2), 6),
        TruncatedSeries::from_polynomial(Polynomial::variable(VarName::s()).pow(3), 6),
        TruncatedSeries::from_polynomial(Polynomial::variable(VarName::s()).scaled(Rational(3, 2)), 5),
    };
    result.steps = {{1, StepKind::Regular}};
    std::string text = render_prolong_ascii(result);
    CHECK(text.find("chart: 1\n") != std::string::npos);
    CHECK(text.find("steps: 1:regular\n") != std::string::npos);
    CHECK(text.find("x2(1) = (3/2)*s\n") != std::string::npos);

    nlohmann::json j = prolong_to_json(result);
    CHECK(j["chart"] == "1");
    CHECK(j["coordinates"][2]["series"] == "(3/2)*s");
}
