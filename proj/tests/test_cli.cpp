#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "unirex/catalog.hpp"

#include "run_cli.hpp"

using namespace unirex;
using testing::run_cli;
using testing::write_temp_graph;
using json = nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("count") {
    auto b4 = run_cli("count --family B4");
    CHECK(b4.exit_code == 0);
    CHECK(b4.output == "U = 27\n");

    auto affine = run_cli("count --family ~A2");
    CHECK(affine.exit_code == 0); // infinite is an answer, not an error
    CHECK(affine.output == "U = infinite (reason: cycle)\n");

    auto single = run_cli("count --file " + write_temp_graph("vertices r\n"));
    CHECK(single.exit_code == 0);
    CHECK(single.output == "U = 2\n");

    auto inf_bond = run_cli("count --family ~A1");
    CHECK(inf_bond.output == "U = infinite (reason: infinite bond)\n");

    auto two_high = run_cli("count --family ~C2");
    CHECK(two_high.output == "U = infinite (reason: two high edges)\n");
}

TEST_CASE("count --verify") {
    auto verified = run_cli("count --family B4 --verify");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output == "U = 27\nverified: oracle agrees\n");

    // verification is skipped for infinite answers
    auto affine = run_cli("count --family ~A3 --verify");
    CHECK(affine.exit_code == 0);
}

TEST_CASE("count --verify never mismatches on the catalog") {
    for (const FamilyName& family : table_families(8)) {
        auto result = run_cli("count --family " + family_to_string(family) + " --verify");
        INFO("family ", family_to_string(family));
        CHECK(result.exit_code == 0);
    }
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("count").exit_code == 1);
    CHECK(run_cli("count --family B4 --file x").exit_code == 1);
    CHECK(run_cli("count --file /nonexistent/path").exit_code == 1);
    CHECK(run_cli("count --family C4").exit_code == 1);
    CHECK(run_cli("count --family B1").exit_code == 1);
    CHECK(run_cli("count --family Q9").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("oracle --family A2 --max-count -5").exit_code == 1);
    auto bad_file = write_temp_graph("vertices r s\nedge r s 2\n");
    CHECK(run_cli("count --file " + bad_file).exit_code == 1);
}

TEST_CASE("overflow exits 2") {
    // 2m - 1 for m = 2^63 does not fit in 64 bits
    CHECK(run_cli("count --family I2:9223372036854775808").exit_code == 2);
}

TEST_CASE("classify") {
    auto f4 = run_cli("classify --family F4");
    CHECK(f4.exit_code == 0);
    CHECK(f4.output == "component 1: single-high-edge tree n=4 m=4 a=2 b=2\n");

    auto witness = run_cli(
        "classify --file " +
        write_temp_graph("vertices r s t\nedge r s 4\nedge s t 4\n"));
    CHECK(witness.exit_code == 0);
    CHECK(witness.output ==
          "component 1: infinite (two high edges), witness: s r s t\n");

    auto single = run_cli("classify --family A1");
    CHECK(single.output == "component 1: simply-laced tree n=1\n");

    auto two_components = run_cli(
        "classify --file " + write_temp_graph("vertices a b c\nedge a b 3\n"));
    auto lines = lines_of(two_components.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "component 1: simply-laced tree n=2");
    CHECK(lines[1] == "component 2: simply-laced tree n=1");
}

TEST_CASE("oracle") {
    auto a2 = run_cli("oracle --family A2");
    CHECK(a2.exit_code == 0);
    auto lines = lines_of(a2.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "oracle U = 5");
    CHECK(lines[1] == "states = 5");

    auto h3 = run_cli("oracle --family H3");
    CHECK(lines_of(h3.output)[0] == "oracle U = 19");

    auto affine = run_cli("oracle --family ~A1");
    CHECK(affine.exit_code == 0);
    CHECK(lines_of(affine.output)[0] == "oracle U = infinite");

    auto census = run_cli("oracle --family A2 --max-length 3");
    auto census_lines = lines_of(census.output);
    REQUIRE(census_lines.size() == 6);
    CHECK(census_lines[2] == "length 0: 1");
    CHECK(census_lines[3] == "length 1: 2");
    CHECK(census_lines[4] == "length 2: 2");
    CHECK(census_lines[5] == "length 3: 0");

    CHECK(run_cli("oracle --family H4 --max-count 10").exit_code == 2);
}

TEST_CASE("list") {
    auto a2 = run_cli("list --file " + write_temp_graph("vertices r s\nedge r s 3\n"));
    CHECK(a2.exit_code == 0);
    CHECK(a2.output == "e\nr\ns\nr s\ns r\n");

    auto a1 = run_cli("list --file " + write_temp_graph("vertices r\n"));
    CHECK(a1.output == "e\nr\n");

    auto catalog_a2 = run_cli("list --family A2");
    CHECK(catalog_a2.output == "e\ns1\ns2\ns1 s2\ns2 s1\n");

    auto cutoff = run_cli("list --family ~A1 --max-length 2");
    CHECK(cutoff.output == "e\ns1\ns2\ns1 s2\ns2 s1\n");

    // an infinite language needs an explicit cutoff
    CHECK(run_cli("list --family ~A1").exit_code == 1);
}

TEST_CASE("table") {
    auto table = run_cli("table");
    CHECK(table.exit_code == 0);
    auto lines = lines_of(table.output);
    bool saw_b4 = false, saw_affine_a1 = false;
    for (const auto& line : lines) {
        if (line == "B4 27") saw_b4 = true;
        if (line == "~A1 infinite") saw_affine_a1 = true;
    }
    CHECK(saw_b4);
    CHECK(saw_affine_a1);

    CHECK(run_cli("table --max-rank 3").exit_code == 1);
}

TEST_CASE("json output round-trips") {
    for (const std::string& args :
         {std::string("count --family B4 --json"), std::string("count --family ~A2 --json"),
          std::string("classify --family F4 --json"), std::string("oracle --family A2 --json"),
          std::string("list --family A2 --json"), std::string("table --max-rank 4 --json")}) {
        auto result = run_cli(args);
        INFO("args: ", args);
        CHECK(result.exit_code == 0);
        for (const auto& line : lines_of(result.output)) {
            json parsed = json::parse(line);
            CHECK(parsed.dump() == line); // reprint is the identity
            CHECK(parsed.contains("subcommand"));
            CHECK(parsed.contains("input"));
        }
    }
}

TEST_CASE("json payloads") {
    auto count = run_cli("count --family B4 --json");
    json count_record = json::parse(lines_of(count.output).at(0));
    CHECK(count_record["subcommand"] == "count");
    CHECK(count_record["input"] == "B4");
    CHECK(count_record["result"] == 27);

    auto infinite = run_cli("count --family ~C3 --json");
    json infinite_record = json::parse(lines_of(infinite.output).at(0));
    CHECK(infinite_record["result"] == "infinite");
    CHECK(infinite_record["reason"] == "multiple-high-edges");

    auto classify = run_cli("classify --family ~A2 --json");
    json classify_record = json::parse(lines_of(classify.output).at(0));
    REQUIRE(classify_record["components"].size() == 1);
    CHECK(classify_record["components"][0]["class"] == "infinite");
    CHECK(classify_record["components"][0]["reason"] == "cycle");
    CHECK(classify_record["components"][0]["witness"] == "s1 s2 s3");

    auto oracle = run_cli("oracle --family A2 --max-length 2 --json");
    json oracle_record = json::parse(lines_of(oracle.output).at(0));
    CHECK(oracle_record["result"] == 5);
    CHECK(oracle_record["states"] == 5);
    CHECK(oracle_record["census"] == json::array({1, 2, 2}));

    auto table = run_cli("table --max-rank 4 --json");
    for (const auto& line : lines_of(table.output)) {
        json row = json::parse(line);
        CHECK(row["subcommand"] == "table");
        if (row["input"] == "B4") CHECK(row["result"] == 27);
    }
}
