#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lieball/cli.hpp"
#include "lieball/root_data.hpp"
#include "lieball/table.hpp"

using namespace lieball;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_starting(const std::string& text, char c)
{
    std::istringstream is(text);
    std::size_t n = 0;
    for (std::string line; std::getline(is, line);)
        if (!line.empty() && line[0] == c) ++n;
    return n;
}

}  // namespace

TEST_CASE("ktypes: Blattner table rows")
{
    const auto r = run({"ktypes", "--m", "2", "--max-l", "4"});
    CHECK(r.code == cli::kPass);
    CHECK(count_lines_starting(r.out, '(') == 5);
    for (int l = 0; l <= 4; ++l)
        CHECK(r.out.find("(" + std::to_string(l + 1) + "; " + std::to_string(l) + ",0)  1") != std::string::npos);
    CHECK(r.out.find("# values: multiplicity") != std::string::npos);
}

TEST_CASE("ktypes outside the weakly fair range is labelled an Euler characteristic")
{
    const auto r = run({"ktypes", "--m", "3", "--lambda", "0", "--max-l", "3"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("Euler characteristic") != std::string::npos);
}

TEST_CASE("ktypes JSON follows the table schema")
{
    const auto r = run({"ktypes", "--m", "2", "--max-l", "4", "--format", "json"});
    REQUIRE(r.code == cli::kPass);
    const auto t = table_from_json(r.out);
    CHECK(t.m == 2);
    CHECK(t.lambda == 1);
    CHECK(t.entries.size() == 5);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("entries").at(0).at("mu") == nlohmann::json::array({0, 0}));
    const auto csv = run({"ktypes", "--m", "2", "--max-l", "1", "--format", "csv"});
    CHECK(csv.out == "mu0,mu_1,mu_2,mult\n1,0,0,1\n2,1,0,1\n");
}

TEST_CASE("harmonic: certified dimensions")
{
    const auto r2 = run({"harmonic", "--m", "2", "--max-l", "2"});
    CHECK(r2.code == cli::kPass);
    CHECK(r2.out.find("dim H^l=1 ") != std::string::npos);
    CHECK(r2.out.find("dim H^l=4 ") != std::string::npos);
    CHECK(r2.out.find("dim H^l=9 ") != std::string::npos);
    const auto r3 = run({"harmonic", "--m", "3", "--max-l", "1", "--format", "json"});
    const auto j = nlohmann::json::parse(r3.out);
    REQUIRE(j.at("entries").size() == 2);
    CHECK(j["entries"][0]["harmonic_dim"] == 1);
    CHECK(j["entries"][1]["harmonic_dim"] == 6);
}

TEST_CASE("verify subcommand")
{
    const auto r = run({"verify", "--m", "2", "--max-l", "6"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(run({"verify", "--m", "4", "--max-l", "3"}).code == cli::kPass);
}

TEST_CASE("verify with an injected rho_c fault exits 1 and names the K-type")
{
    VerifyOptions o;
    o.m = 2;
    o.max_l = 3;
    auto bad = rho_c(2).to_ints();
    for (auto& x : bad) x -= 1;
    o.rho_c_override = bad;
    std::ostringstream out;
    CHECK(cli::emit_verify_report(verify(o), o, cli::OutputFormat::text, out) == cli::kVerificationFailure);
    CHECK(out.str().find("[FAIL] ktype-tables: first difference at (1; 1,1)") != std::string::npos);
    std::ostringstream json;
    cli::emit_verify_report(verify(o), o, cli::OutputFormat::json, json);
    const auto j = nlohmann::json::parse(json.str());
    CHECK(j["pass"] == false);
    CHECK(j["first_difference"]["mu"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("weyl subcommand")
{
    const auto r2 = run({"weyl", "--m", "2"});
    CHECK(r2.code == cli::kPass);
    CHECK(r2.out.find("len=0") != std::string::npos);
    CHECK(r2.out.find("len=1") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"weyl", "--m", "4", "--format", "json"}).out);
    CHECK(j["count"] == 8);
    CHECK(j["elements"].size() == 8);
    CHECK(run({"weyl", "--m", "9"}).code == cli::kUsageError);
}

TEST_CASE("ranges, verma and ehw subcommands")
{
    const auto r = run({"ranges", "--m", "3"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("weakly fair: yes") != std::string::npos);
    CHECK(r.out.find("good: no") != std::string::npos);
    CHECK(r.out.find("(singular)") != std::string::npos);
    CHECK(r.out.find("mu_lambda: (2; 0,0,0)") != std::string::npos);

    const auto v = run({"verma", "--m", "3", "--max-l", "4"});
    CHECK(v.code == cli::kPass);
    CHECK(v.out.find("consistent") != std::string::npos);

    const auto e = nlohmann::json::parse(run({"ehw", "--m", "3", "--format", "json"}).out);
    CHECK(e["A"] == "3");
    CHECK(e["B"] == "5");
    CHECK(e["knapp_stein_degree_at_m_minus_1"] == 1);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"ktypes", "--m", "2", "--bogus"}).code == cli::kUsageError);
    CHECK(run({"ktypes"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"ktypes", "--m", "1"}).code == cli::kUsageError);
    CHECK(run({"ktypes", "--m", "2", "--max-l", "-1"}).code == cli::kUsageError);
    CHECK(run({"ktypes", "--m", "2", "--format", "xml"}).code == cli::kUsageError);
    const auto bad = run({"harmonic", "--m", "two"});
    CHECK(bad.code == cli::kUsageError);
    CHECK(bad.err.find("Usage") != std::string::npos);
}

TEST_CASE("output is byte-stable and --out writes the same bytes")
{
    const auto a = run({"ktypes", "--m", "3", "--max-l", "3", "--format", "json"});
    const auto b = run({"ktypes", "--m", "3", "--max-l", "3", "--format", "json"});
    CHECK(a.out == b.out);
    const auto v1 = run({"verify", "--m", "2", "--max-l", "3", "--seed", "9", "--format", "json"});
    const auto v2 = run({"verify", "--m", "2", "--max-l", "3", "--seed", "9", "--format", "json"});
    CHECK(v1.out == v2.out);

    const auto path = std::filesystem::temp_directory_path() / "lieball_cli_test.json";
    const auto f = run({"ktypes", "--m", "3", "--max-l", "3", "--format", "json", "--out", path.string()});
    CHECK(f.code == cli::kPass);
    CHECK(f.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
    std::filesystem::remove(path);
    CHECK(run({"ktypes", "--m", "2", "--out", "/nonexistent-dir/x.json"}).code == cli::kUsageError);
}
