// Command-line front end: every computation of the library behind one of
// the subcommands binomials / chain / codewords / nodeword / prolong / verify,
// with ascii, dot and json output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 breached internal invariant.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "semple/binomials.hpp"
#include "semple/chain.hpp"
#include "semple/curve_parser.hpp"
#include "semple/curves.hpp"
#include "semple/errors.hpp"
#include "semple/render.hpp"
#include "semple/tower.hpp"
#include "semple/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool is_internal(semple::ErrorCode code) {
    switch (code) {
    case semple::ErrorCode::MismatchWithRecursion:
    case semple::ErrorCode::InconsistentChain:
    case semple::ErrorCode::EliminationFailed:
    case semple::ErrorCode::IncompatibleTwigWords:
        return true;
    default:
        return false;
    }
}

semple::ChartString parse_chart_or_exit(const std::string& text) {
    auto chart = semple::ChartString::parse(text);
    if (!chart) {
        std::cerr << "error: chart string '" << text << "' may contain only '1' and '2'\n";
        std::exit(kExitUsage);
    }
    return *chart;
}

int run_binomials(const std::string& chart_text, bool chart_given, bool all, int level,
                  const std::string& format) {
    using namespace semple;
    if (all) {
        if (format == "json") {
            std::cout << binomials_to_json(binomials_up_to(level)).dump(2) << "\n";
        } else if (format == "dot") {
            std::cout << render_binomials_dot(level);
        } else {
            std::cout << render_binomials_table(level);
        }
        return kExitOk;
    }
    if (!chart_given) {
        std::cerr << "error: give --chart STR or --all --level K\n";
        return kExitUsage;
    }
    ChartString chart = parse_chart_or_exit(chart_text);
    std::vector<NodeBinomial> prefixes;
    for (std::size_t j = 0; j <= chart.size(); ++j)
        prefixes.push_back(node_binomial(chart.prefix(j)));
    if (format == "json") {
        std::cout << binomials_to_json(prefixes).dump(2) << "\n";
    } else {
        for (const NodeBinomial& b : prefixes) std::cout << b.render() << "\n";
    }
    return kExitOk;
}

int run_chain(int level, bool words, bool mults, const std::string& format) {
    using namespace semple;
    AnnotatedChain annotated = annotate_chain(build_chain(level));
    ChainRenderOptions options{words, mults};
    if (format == "json") {
        std::cout << chain_to_json(annotated).dump(2) << "\n";
    } else if (format == "dot") {
        std::cout << render_chain_dot(annotated, options);
    } else {
        std::cout << render_chain_ascii(annotated, options);
    }
    return kExitOk;
}

int run_codewords(int level, const std::string& format) {
    using namespace semple;
    std::vector<CodeWord> words = enumerate_code_words(level);
    if (format == "json") {
        nlohmann::json j;
        j["level"] = level;
        j["count"] = words.size();
        j["words"] = nlohmann::json::array();
        for (const CodeWord& w : words) j["words"].push_back(w.str());
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    for (const CodeWord& w : words) std::cout << w.str() << "\n";
    std::cout << "count=" << words.size() << " (F_" << 2 * level - 1 << ")\n";
    return kExitOk;
}

int run_nodeword(const std::string& label_text, bool trace, const std::string& format) {
    using namespace semple;
    ChartString label = parse_chart_or_exit(label_text);
    CodeWord recursive = node_word_recursive(label);
    CodeWord explicit_word = node_word_explicit(label);
    if (recursive != explicit_word) {
        std::cerr << "internal error: node-word algorithms disagree on '" << label.text()
                  << "': " << recursive.str() << " vs " << explicit_word.str() << "\n";
        return kExitInternal;
    }
    if (format == "json") {
        if (trace) {
            std::cout << trace_to_json(trace_node_word(label)).dump(2) << "\n";
        } else {
            nlohmann::json j{{"label", label.text()}, {"word", recursive.str()}};
            std::cout << j.dump(2) << "\n";
        }
        return kExitOk;
    }
    if (trace) std::cout << render_trace_ascii(trace_node_word(label));
    std::cout << recursive.str() << "\n";
    return kExitOk;
}

int run_prolong(const std::string& path, int levels, const std::string& format) {
    using namespace semple;
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    CurveSpec spec = parse_curve_spec(buffer.str());
    int target_level = static_cast<int>(spec.chart.size()) + levels;
    int order = 2 * target_level + 4;
    if (const char* env = std::getenv("SEMPLE_SERIES_ORDER")) {
        int parsed = std::atoi(env);
        if (parsed > 0) order = parsed;
    }
    ProlongResult result = prolong(curve_from_spec(spec, order), levels);
    if (format == "json")
        std::cout << prolong_to_json(result).dump(2) << "\n";
    else
        std::cout << render_prolong_ascii(result);
    return kExitOk;
}

int run_verify(int level) {
    using namespace semple;
    int failures = 0;
    int checks = 0;
    std::vector<ChartString> charts = {ChartString{}};
    for (int j = 0; j < level; ++j) {
        std::vector<ChartString> next;
        for (const ChartString& s : charts) {
            next.push_back(s.child(1));
            next.push_back(s.child(2));
        }
        charts = std::move(next);
    }
    auto report = [&](const ChartString& chart, const char* what, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " C(" << chart.text() << ") " << what << "\n";
    };

    for (const ChartString& chart : charts) {
        // Binomial recursion against the implicit-differentiation route.
        bool binomials_ok = true;
        try {
            std::vector<Polynomial> derived = binomials_by_differentiation(chart);
            for (std::size_t j = 0; j <= chart.size(); ++j)
                if (!equal_up_to_positive_scale(derived[j],
                                                node_binomial(chart.prefix(j)).polynomial()))
                    binomials_ok = false;
        } catch (const Error&) {
            binomials_ok = false;
        }
        report(chart, "binomials-cross-method", binomials_ok);

        // Flat-limit exponents against the node multiplicities.
        bool flat_ok = true;
        try {
            FlatLimit limit = verify_flat_limit(chart);
            auto [retained_mult, emergent_mult] = node_multiplicities(chart);
            flat_ok = limit.unit != 0 && limit.exp_new == retained_mult &&
                      limit.exp_retained == emergent_mult;
        } catch (const Error&) {
            flat_ok = false;
        }
        report(chart, "flat-limit-exponents", flat_ok);

        // The two node-word algorithms.
        bool words_ok = node_word_recursive(chart) == node_word_explicit(chart);
        report(chart, "node-words", words_ok);
    }
    std::cout << "verify level " << level << ": " << (checks - failures) << "/" << checks
              << " checks passed\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for the prolongation tower of the family x1*x2 = t"};
    app.require_subcommand(1);

    // binomials
    auto* binomials = app.add_subcommand("binomials", "Defining binomials per chart");
    std::string chart_text;
    bool all = false;
    int level = 3;
    std::string format = "ascii";
    auto* chart_opt = binomials->add_option("--chart", chart_text, "Chart string over {1,2}");
    binomials->add_flag("--all", all, "Every chart prefix up to --level");
    binomials->add_option("--level", level, "Tree depth for --all");
    binomials->add_option("--format", format, "ascii|json|dot")
        ->check(CLI::IsMember({"ascii", "json", "dot"}));

    // chain
    auto* chain = app.add_subcommand("chain", "Central-fiber chain at a level");
    int chain_level = 3;
    bool words = false, mults = false;
    std::string chain_format = "ascii";
    chain->add_option("--level", chain_level, "Prolongation level (>= 0)")->required();
    chain->add_flag("--words", words, "Annotate with stratum words");
    chain->add_flag("--multiplicities", mults, "Annotate twigs with multiplicities");
    chain->add_option("--format", chain_format, "ascii|dot|json")
        ->check(CLI::IsMember({"ascii", "dot", "json"}));

    // codewords
    auto* codewords = app.add_subcommand("codewords", "Enumerate admissible stratum words");
    int codeword_level = 1;
    std::string codeword_format = "ascii";
    codewords->add_option("--level", codeword_level, "Word length (>= 1)")->required();
    codewords->add_option("--format", codeword_format, "ascii|json")
        ->check(CLI::IsMember({"ascii", "json"}));

    // nodeword
    auto* nodeword = app.add_subcommand("nodeword", "Stratum word of a node");
    std::string label_text;
    bool trace = false;
    std::string nodeword_format = "ascii";
    nodeword->add_option("label", label_text, "Node label over {1,2}")->required();
    nodeword->add_flag("--trace", trace, "Show the level-by-level recursion");
    nodeword->add_option("--format", nodeword_format, "ascii|json")
        ->check(CLI::IsMember({"ascii", "json"}));

    // prolong
    auto* prolong_cmd = app.add_subcommand(
        "prolong",
        "Lift a parametrized curve; series are truncated at order 2k+4 for the "
        "target level k (override with SEMPLE_SERIES_ORDER)");
    std::string curve_path;
    int levels = 1;
    std::string prolong_format = "ascii";
    prolong_cmd->add_option("file", curve_path, "Curve file (name = poly in s; ...)")->required();
    prolong_cmd->add_option("--levels", levels, "Number of lifts");
    prolong_cmd->add_option("--format", prolong_format, "ascii|json")
        ->check(CLI::IsMember({"ascii", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check every chart at a level");
    int verify_level = 1;
    verify->add_option("--level", verify_level, "Level to verify (>= 1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (binomials->parsed())
            return run_binomials(chart_text, chart_opt->count() > 0, all, level, format);
        if (chain->parsed()) return run_chain(chain_level, words, mults, chain_format);
        if (codewords->parsed()) return run_codewords(codeword_level, codeword_format);
        if (nodeword->parsed()) return run_nodeword(label_text, trace, nodeword_format);
        if (prolong_cmd->parsed()) return run_prolong(curve_path, levels, prolong_format);
        if (verify->parsed()) return run_verify(verify_level);
    } catch (const semple::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const semple::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_internal(e.code()) ? kExitInternal : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
