#include "semple/render.hpp"

#include <algorithm>
#include <sstream>

#include "semple/errors.hpp"

namespace semple {

namespace {

std::string node_cell(const ChartString& node, const CodeWord& word,
                      const ChainRenderOptions& options) {
    std::string cell = node_label(node);
    if (options.words && !word.empty()) cell += "=" + word.str();
    return cell;
}

std::string twig_cell(const TwigLabel& twig, long long multiplicity, const CodeWord& word,
                      const ChainRenderOptions& options) {
    std::string cell = twig.str();
    if (options.multiplicities) cell += "*" + std::to_string(multiplicity);
    if (options.words && !word.empty()) cell += "=" + word.str();
    return cell;
}

void place_centered(std::string& row, std::size_t slot, std::size_t width, const std::string& text) {
    std::size_t start = slot * width + (width - text.size()) / 2;
    if (row.size() < start + text.size()) row.resize(start + text.size(), ' ');
    row.replace(start, text.size(), text);
}

std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

} // namespace

std::string render_chain_ascii(const AnnotatedChain& ac, const ChainRenderOptions& options) {
    const TwigChain& chain = ac.chain;
    const std::size_t elements = chain.nodes.size() + chain.twigs.size();

    std::vector<std::string> cells(elements);
    for (std::size_t e = 0; e < elements; ++e) {
        if (e % 2 == 0)
            cells[e] = twig_cell(chain.twigs[e / 2], chain.multiplicities[e / 2],
                                 ac.twig_words[e / 2], options);
        else
            cells[e] = node_cell(chain.nodes[(e - 1) / 2], ac.node_words[(e - 1) / 2], options);
    }
    std::size_t width = 0;
    for (const std::string& c : cells) width = std::max(width, c.size());
    width += 2;

    std::string high, mid, low;
    for (std::size_t e = 0; e < elements; ++e) {
        if (e % 2 == 0) {
            place_centered(mid, e, width, cells[e]);
        } else if (((e - 1) / 2) % 2 == 0) {
            place_centered(low, e, width, cells[e]);
        } else {
            place_centered(high, e, width, cells[e]);
        }
    }

    std::string out;
    for (const std::string& row : {high, mid, low}) {
        std::string r = rstrip(row);
        if (!r.empty()) out += r + "\n";
    }
    return out;
}

std::string render_chain_dot(const AnnotatedChain& ac, const ChainRenderOptions& options) {
    const TwigChain& chain = ac.chain;
    std::ostringstream out;
    out << "graph chain {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    out << "  end_l [shape=point];\n";
    out << "  end_r [shape=point];\n";
    for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << node_label(chain.nodes[i]);
        if (options.words) out << "\\n" << ac.node_words[i].str();
        out << "\"];\n";
    }
    for (std::size_t t = 0; t < chain.twigs.size(); ++t) {
        std::string from = (t == 0) ? "end_l" : "n" + std::to_string(t - 1);
        std::string to = (t == chain.twigs.size() - 1) ? "end_r" : "n" + std::to_string(t);
        out << "  " << from << " -- " << to << " [label=\""
            << twig_cell(chain.twigs[t], chain.multiplicities[t], ac.twig_words[t], options)
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json chain_to_json(const AnnotatedChain& ac) {
    const TwigChain& chain = ac.chain;
    nlohmann::json j;
    j["level"] = chain.level;
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
        j["nodes"].push_back({{"label", chain.nodes[i].text()},
                              {"word", ac.node_words[i].str()}});
    }
    j["twigs"] = nlohmann::json::array();
    for (std::size_t t = 0; t < chain.twigs.size(); ++t) {
        nlohmann::json twig;
        switch (chain.twigs[t].kind) {
        case TwigLabel::Kind::LeftEnd: twig["label"] = "left-end"; break;
        case TwigLabel::Kind::RightEnd: twig["label"] = "right-end"; break;
        case TwigLabel::Kind::Interior: twig["label"] = chain.twigs[t].label.text(); break;
        }
        twig["word"] = ac.twig_words[t].str();
        twig["multiplicity"] = chain.multiplicities[t];
        if (!chain.twigs[t].is_end()) twig["emergent_level"] = chain.emergent_levels[t];
        j["twigs"].push_back(std::move(twig));
    }
    return j;
}

AnnotatedChain chain_from_json(const nlohmann::json& j) {
    AnnotatedChain ac;
    ac.chain.level = j.at("level").get<int>();
    for (const auto& node : j.at("nodes")) {
        auto label = ChartString::parse(node.at("label").get<std::string>());
        auto word = CodeWord::parse(node.at("word").get<std::string>());
        if (!label || !word) throw Error(ErrorCode::InvalidArgument, "bad node entry");
        ac.chain.nodes.push_back(*label);
        ac.node_words.push_back(*word);
    }
    for (const auto& twig : j.at("twigs")) {
        std::string label = twig.at("label").get<std::string>();
        if (label == "left-end") {
            ac.chain.twigs.push_back(TwigLabel::left_end());
            ac.chain.emergent_levels.push_back(0);
        } else if (label == "right-end") {
            ac.chain.twigs.push_back(TwigLabel::right_end());
            ac.chain.emergent_levels.push_back(0);
        } else {
            auto parsed = ChartString::parse(label);
            if (!parsed) throw Error(ErrorCode::InvalidArgument, "bad twig label");
            ac.chain.twigs.push_back(TwigLabel::interior(*parsed));
            ac.chain.emergent_levels.push_back(twig.at("emergent_level").get<int>());
        }
        auto word = CodeWord::parse(twig.at("word").get<std::string>());
        if (!word) throw Error(ErrorCode::InvalidArgument, "bad twig word");
        ac.twig_words.push_back(*word);
        ac.chain.multiplicities.push_back(twig.at("multiplicity").get<long long>());
    }
    return ac;
}

std::vector<NodeBinomial> binomials_up_to(int level) {
    std::vector<NodeBinomial> out;
    std::vector<ChartString> frontier = {ChartString{}};
    out.push_back(node_binomial(ChartString{}));
    for (int j = 1; j <= level; ++j) {
        std::vector<ChartString> next;
        for (const ChartString& s : frontier) {
            next.push_back(s.child(1));
            next.push_back(s.child(2));
        }
        for (const ChartString& s : next) out.push_back(node_binomial(s));
        frontier = std::move(next);
    }
    return out;
}

std::string render_binomials_table(int level) {
    std::ostringstream out;
    for (const NodeBinomial& b : binomials_up_to(level))
        out << "B(" << b.chart.text() << ")=" << b.render() << "\n";
    return out.str();
}

nlohmann::json binomials_to_json(const std::vector<NodeBinomial>& binomials) {
    nlohmann::json j = nlohmann::json::array();
    for (const NodeBinomial& b : binomials) {
        j.push_back({{"chart", b.chart.text()},
                     {"alpha", b.alpha},
                     {"beta", b.beta},
                     {"text", b.render()}});
    }
    return j;
}

std::string render_binomials_dot(int level) {
    std::ostringstream out;
    out << "graph binomials {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (const NodeBinomial& b : binomials_up_to(level)) {
        out << "  b" << b.chart.text() << " [label=\"" << b.render() << "\"];\n";
        if (!b.chart.empty())
            out << "  b" << b.chart.parent().text() << " -- b" << b.chart.text() << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_trace_ascii(const NodeWordTrace& trace) {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"level", "node", "word", "emergent", "retained"});
    for (const TraceLevel& entry : trace.levels) {
        std::array<std::string, 5> row;
        row[0] = std::to_string(entry.level);
        row[1] = node_label(entry.node);
        row[2] = entry.word.empty() ? "-" : entry.word.str();
        if (entry.step) {
            row[3] = entry.step->emergent.str() + "=" + entry.step->emergent_word.str();
            row[4] = entry.step->retained.str() + "=" + entry.step->retained_word.str();
        } else {
            row[3] = "-";
            row[4] = "-";
        }
        rows.push_back(std::move(row));
    }
    std::array<std::size_t, 5> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < 5; ++c) {
            std::string cell = row[c];
            cell.resize(width[c], ' ');
            line += cell;
            if (c + 1 < 5) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

nlohmann::json trace_to_json(const NodeWordTrace& trace) {
    nlohmann::json j;
    j["label"] = trace.label.text();
    j["word"] = trace.word.str();
    j["levels"] = nlohmann::json::array();
    for (const TraceLevel& entry : trace.levels) {
        nlohmann::json e;
        e["level"] = entry.level;
        e["node"] = entry.node.text();
        e["word"] = entry.word.str();
        if (entry.step) {
            e["emergent"] = {{"twig", entry.step->emergent.str()},
                             {"word", entry.step->emergent_word.str()}};
            e["retained"] = {{"twig", entry.step->retained.str()},
                             {"word", entry.step->retained_word.str()}};
        }
        j["levels"].push_back(std::move(e));
    }
    return j;
}

std::string render_prolong_ascii(const ProlongResult& result) {
    std::ostringstream out;
    out << "chart: " << result.curve.chart.text() << "\n";
    out << "steps:";
    if (result.steps.empty()) out << " (none)";
    for (const LiftStep& step : result.steps)
        out << " " << step.symbol << ":" << step_kind_name(step.kind);
    out << "\n";
    int order = result.curve.coords.empty() ? 0 : result.curve.coords.front().order();
    for (const TruncatedSeries& series : result.curve.coords)
        order = std::min(order, series.order());
    out << "order: " << order << "\n";
    std::vector<VarName> names = chart_coordinates(result.curve.chart);
    for (std::size_t i = 0; i < names.size(); ++i)
        out << names[i].str() << " = " << result.curve.coords[i].str() << "\n";
    return out.str();
}

nlohmann::json prolong_to_json(const ProlongResult& result) {
    nlohmann::json j;
    j["chart"] = result.curve.chart.text();
    j["steps"] = nlohmann::json::array();
    for (const LiftStep& step : result.steps)
        j["steps"].push_back({{"symbol", step.symbol}, {"kind", step_kind_name(step.kind)}});
    j["coordinates"] = nlohmann::json::array();
    std::vector<VarName> names = chart_coordinates(result.curve.chart);
    for (std::size_t i = 0; i < names.size(); ++i) {
        j["coordinates"].push_back({{"name", names[i].str()},
                                    {"series", result.curve.coords[i].str()},
                                    {"order", result.curve.coords[i].order()}});
    }
    return j;
}

} // namespace semple
