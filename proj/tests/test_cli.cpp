#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string("\"") + BPART_CLI_PATH + "\" " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t next = text.find('\n', pos);
        if (next == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("enumerate lists the nine partitions of 15") {
    const auto result = run_cli("enumerate --sum 15");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines.front() == "13+2");
    CHECK(lines.back() == "6+4+3+2");
}

TEST_CASE("enumerate with an impossible total prints nothing and succeeds") {
    const auto result = run_cli("enumerate --sum 1");
    CHECK(result.exit_code == 0);
    CHECK(result.out.empty());
}

TEST_CASE("enumerate annotates weights on request") {
    const auto result = run_cli("enumerate --sum 15 --weights");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("9+4+2 w=1 phi=2") != std::string::npos);
    CHECK(result.out.find("13+2 w=0 phi=1") != std::string::npos);
}

TEST_CASE("enumerate pseudo-Euclidean members") {
    const auto light = run_cli("enumerate --sum 4 --pe light");
    CHECK(light.exit_code == 0);
    CHECK(light.out == "2|2\n");

    const auto space = run_cli("enumerate --sum 3 --pe space");
    CHECK(space.exit_code == 0);
    CHECK(space.out == "1|2\n");

    const auto empty = run_cli("enumerate --sum 3 --pe light");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("enumerate groups by the largest-pair statistic on request") {
    const auto result = run_cli("enumerate --sum 4 --pe space --pe-stat largest");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("2+1|2") != std::string::npos);
}

TEST_CASE("series prints the small degrees correctly") {
    const auto result = run_cli("series --max 15");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 16);
    CHECK(lines.front() == "q^0: 1");
    CHECK(lines[5] == "q^5: 1");
    CHECK(lines[13] == "q^13: 6");
    CHECK(lines.back() == "q^15: 9");
}

TEST_CASE("weighted series keeps the marker") {
    const auto result = run_cli("series --max 12 --weighted");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("q^12: 1+2x+x^2") != std::string::npos);
    CHECK(result.out.find("q^6: 1+x") != std::string::npos);
}

TEST_CASE("series of order zero") {
    const auto result = run_cli("series --max 0");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "q^0: 1\n");
}

TEST_CASE("series diff column is all zero") {
    const auto result = run_cli("series --max 18 --method both");
    CHECK(result.exit_code == 0);
    for (const std::string& line : lines_of(result.out)) {
        if (!line.empty()) CHECK(line.substr(line.size() - 7) == " diff=0");
    }

    const auto weighted = run_cli("series --max 15 --weighted --method both");
    CHECK(weighted.exit_code == 0);
    CHECK(weighted.out.find("diff=0") != std::string::npos);

    const auto pe = run_cli("series --max 10 --pe light --method both");
    CHECK(pe.exit_code == 0);
    for (const std::string& line : lines_of(pe.out)) {
        if (!line.empty()) CHECK(line.substr(line.size() - 7) == " diff=0");
    }
}

TEST_CASE("series oracle method stands alone") {
    const auto result = run_cli("series --max 15 --method oracle");
    CHECK(result.exit_code == 0);
    CHECK(lines_of(result.out).back() == "q^15: 9");
}

TEST_CASE("weighted pseudo-Euclidean series is a usage error") {
    const auto result = run_cli("series --max 6 --weighted --pe light");
    CHECK(result.exit_code == 2);
}

TEST_CASE("decompose splits into irreducible plus padding") {
    const auto result = run_cli("decompose \"9+4+2\"");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "(5+4+2) + (4+0+0)\n");

    const auto trivial = run_cli("decompose \"2\"");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.out == "(2) + (0)\n");
}

TEST_CASE("decompose rejects non-members with a domain error") {
    CHECK(run_cli("decompose \"9\"").exit_code == 1);
    CHECK(run_cli("decompose \"7+5+2\"").exit_code == 1);
    CHECK(run_cli("decompose \"2+4\"").exit_code == 1);
    CHECK(run_cli("decompose \"abc\"").exit_code == 1);
}

TEST_CASE("phi prints the weight") {
    const auto result = run_cli("phi \"6+4+2\"");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "w=2 phi=4\n");
    CHECK(run_cli("phi \"9\"").exit_code == 1);
}

TEST_CASE("verify euclid at order 15 passes") {
    const auto result = run_cli("verify --suite euclid --max 15");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify shapes on the single-part row") {
    const auto result = run_cli("verify --suite shapes --dmax 1 --nmax 3 --order 20");
    CHECK(result.exit_code == 0);
}

TEST_CASE("verify pe as json carries the report schema") {
    const auto result = run_cli("verify --suite pe --max 8 --format json");
    CHECK(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["format_version"] == "1");
    CHECK(j["command"] == "verify");
    CHECK(j["result"]["suite"] == "pe");
    CHECK(j["result"]["mismatches"].is_array());
    CHECK(j["result"]["mismatches"].empty());
    CHECK(j["result"].contains("elapsed_ms"));
    CHECK(j["result"].contains("cells_checked"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("enumerate --nope 3").exit_code == 2);
    CHECK(run_cli("enumerate").exit_code == 2);
    CHECK(run_cli("enumerate --sum 0").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
    for (const std::string args :
         {std::string("enumerate --sum 15 --weights --format json"),
          std::string("enumerate --sum 6 --pe time --format json"),
          std::string("series --max 10 --weighted --format json")}) {
        const auto result = run_cli(args);
        CHECK(result.exit_code == 0);
        const json parsed = json::parse(result.out);
        CHECK(parsed.dump(2) + "\n" == result.out);
        CHECK(parsed["format_version"] == "1");
    }
}

TEST_CASE("json enumerate payload") {
    const auto result = run_cli("enumerate --sum 15 --format json");
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["command"] == "enumerate");
    CHECK(j["parameters"]["sum"] == 15);
    CHECK(j["result"]["count"] == 9);
    CHECK(j["result"]["partitions"][0]["text"] == "13+2");
    CHECK(j["result"]["partitions"][0]["parts"] == json::array({13, 2}));
}
