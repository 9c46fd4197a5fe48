#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "semple/render.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string command = env_prefix + (env_prefix.empty() ? "" : " ") +
                          std::string(SEMPLE_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        output.append(buffer.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string data_file(const std::string& name) {
    return std::string(SEMPLE_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("binomials subcommand") {
    RunResult chart = run("binomials --chart 212");
    CHECK(chart.exit_code == 0);
    CHECK(chart.output ==
          "x1x2\nx1(2)x2+x1\n2x1(2)x2(21)+x2\n3x1(212)x2(21)+2x1(2)\n");

    RunResult base = run("binomials --chart \"\"");
    CHECK(base.exit_code == 0);
    CHECK(base.output == "x1x2\n");

    RunResult all = run("binomials --all --level 3");
    CHECK(all.exit_code == 0);
    int lines = 0;
    for (char c : all.output)
        if (c == '\n') ++lines;
    CHECK(lines == 15);
    CHECK(all.output.find("B(212)=3x1(212)x2(21)+2x1(2)\n") != std::string::npos);

    RunResult bad = run("binomials --chart 210");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("chain subcommand") {
    RunResult json = run("chain --level 3 --format json");
    CHECK(json.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json.output);
    CHECK(parsed["level"] == 3);
    std::vector<long long> mults;
    for (const auto& twig : parsed["twigs"]) mults.push_back(twig["multiplicity"].get<long long>());
    CHECK(mults == std::vector<long long>{1, 4, 3, 5, 2, 5, 3, 4, 1});

    RunResult base = run("chain --level 0");
    CHECK(base.exit_code == 0);
    CHECK(base.output.find("N()") != std::string::npos);

    RunResult ascii = run("chain --level 3 --words");
    CHECK(ascii.exit_code == 0);
    CHECK(ascii.output.find("N(212)=RV2V3") != std::string::npos);

    RunResult bad = run("chain");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("codewords subcommand") {
    RunResult words = run("codewords --level 3");
    CHECK(words.exit_code == 0);
    CHECK(words.output == "RRR\nRRV3\nRV2R\nRV2V2\nRV2V3\ncount=5 (F_5)\n");
}

TEST_CASE("nodeword subcommand") {
    RunResult word = run("nodeword 222122112");
    CHECK(word.exit_code == 0);
    CHECK(word.output == "RRRV4V5V5V7V7V9\n");

    RunResult traced = run("nodeword 21221 --trace");
    CHECK(traced.exit_code == 0);
    CHECK(traced.output.back() == '\n');
    std::string tail = traced.output.substr(traced.output.rfind('\n', traced.output.size() - 2) + 1);
    CHECK(tail == "RV2V3V3V5\n");

    RunResult bad = run("nodeword 2x1");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("prolong subcommand") {
    RunResult lifted = run("prolong " + data_file("cusp.curve") + " --levels 1");
    CHECK(lifted.exit_code == 0);
    CHECK(lifted.output.find("x2(1) = (3/2)*s\n") != std::string::npos);
    CHECK(lifted.output.find("chart: 1\n") != std::string::npos);

    // default truncation order is 2k+4; the environment variable overrides it
    RunResult json = run("prolong " + data_file("cusp.curve") + " --levels 1 --format json");
    CHECK(json.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json.output);
    CHECK(parsed["coordinates"][0]["order"] == 6);

    RunResult wide = run("prolong " + data_file("cusp.curve") + " --levels 1 --format json",
                         "SEMPLE_SERIES_ORDER=12");
    CHECK(wide.exit_code == 0);
    CHECK(nlohmann::json::parse(wide.output)["coordinates"][0]["order"] == 12);

    RunResult empty = run("prolong " + data_file("empty.curve"));
    CHECK(empty.exit_code == 2);
    CHECK(empty.output.find("parse error") != std::string::npos);
    CHECK(empty.output.find("line 1") != std::string::npos);

    RunResult missing = run("prolong " + data_file("does_not_exist.curve"));
    CHECK(missing.exit_code == 2);
}

TEST_CASE("verify subcommand") {
    RunResult ok = run("verify --level 3");
    CHECK(ok.exit_code == 0);
    int passes = 0;
    std::size_t pos = 0;
    while ((pos = ok.output.find("PASS", pos)) != std::string::npos) {
        ++passes;
        pos += 4;
    }
    CHECK(passes == 24); // 8 charts x 3 checks
    CHECK(ok.output.find("FAIL") == std::string::npos);

    RunResult deep = run("verify --level 8");
    CHECK(deep.exit_code == 0);
    CHECK(deep.output.find("768/768 checks passed") != std::string::npos);
}
