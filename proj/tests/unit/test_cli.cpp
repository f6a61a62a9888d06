#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "uavcov/scenario.hpp"
#include "uavcov_cli/cli.hpp"

using namespace uavcov;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "uavcov_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

const std::string kToy = std::string(UAVCOV_TEST_DATA_DIR) + "/toy_alpha4.yaml";

}  // namespace

TEST_CASE("curve writes one row per sweep point")
{
    const Result r = run_cli({"curve", "--preset", "fig1a_irs_0.1W", "--method", "closed-form"});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 42);
    CHECK(rows[0] == "threshold_db,p_cov,method,scenario");
    CHECK_THAT(rows[1], StartsWith("-10,"));
    CHECK_THAT(rows[41], StartsWith("30,"));
    CHECK_THAT(rows[1], ContainsSubstring(",closed-form,fig1a_irs_0.1W"));
    CHECK(r.out.find('\r') == std::string::npos);
    CHECK(run_cli({"curve", "--preset", "fig1a_irs_0.1W"}).out == r.out);
}

TEST_CASE("usage and catalog failures map to distinct exit codes")
{
    const Result unknown = run_cli({"curve", "--preset", "fig9z"});
    CHECK(unknown.code == cli::kExitValidation);
    CHECK_THAT(unknown.err, ContainsSubstring("fig1a_irs_0.1W"));

    CHECK(run_cli({"curve"}).code == cli::kExitUsage);
    CHECK(run_cli({"curve", "--preset", "fig1a", "--method", "guess"}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
    CHECK(run_cli({"curve", "--scenario", "/nonexistent.yaml"}).code == cli::kExitIo);
    CHECK(run_cli({"curve", "--preset", "fig1a", "--out", "/nonexistent/dir/out.csv"}).code == cli::kExitIo);
}

TEST_CASE("compare reports tolerable thresholds")
{
    const Result r = run_cli({"compare", "fig1a_conv_0.5W", "fig1a_conv_1W", "fig1a_irs_0.1W"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK_THAT(r.out, StartsWith("threshold_db,fig1a_conv_0.5W,fig1a_conv_1W,fig1a_irs_0.1W\n"));
    CHECK_THAT(r.out, ContainsSubstring("tolerable SINR threshold"));
    CHECK_THAT(r.out, ContainsSubstring("fig1a_irs_0.1W   15 dB"));

    CHECK(run_cli({"compare", "fig1a_conv_0.5W"}).code == cli::kExitUsage);
    CHECK(run_cli({"compare", "fig1a_conv_0.5W", kToy}).code == cli::kExitUsage);

    const Result same = run_cli({"compare", "fig2a", "fig2a"});
    REQUIRE(same.code == cli::kExitOk);
    for (const auto& row : lines(same.out)) {
        const auto comma = row.find(',');
        if (comma == std::string::npos || row.rfind("threshold_db", 0) == 0) {
            continue;
        }
        const std::string rest = row.substr(comma + 1);
        const auto mid = rest.find(',');
        CHECK(rest.substr(0, mid) == rest.substr(mid + 1));
    }
}

TEST_CASE("validate refuses alpha = 2 without a radius and zero trials")
{
    const Result r = run_cli({"validate", "--preset", "fig1a_irs_0.1W", "--trials", "1000"});
    CHECK(r.code == cli::kExitValidation);
    CHECK_THAT(r.err, ContainsSubstring("--radius"));
    CHECK(run_cli({"validate", "--scenario", kToy, "--trials", "0"}).code == cli::kExitUsage);
}

TEST_CASE("validate on the alpha = 4 toy reports all three methods")
{
    const Result r = run_cli({"validate", "--scenario", kToy, "--trials", "20000", "--seed", "5"});
    const auto rows = lines(r.out);
    REQUIRE(rows.size() >= 4);
    CHECK(rows[0] ==
          "threshold_db,closed_form,integral,mc_p_cov,mc_complement_union,mc_reference_half_width_99,status");
    CHECK_THAT(r.out, ContainsSubstring("verdict: "));
    CHECK((r.code == cli::kExitOk || r.code == cli::kExitNumerical));
}

TEST_CASE("outputs come with a manifest that replays byte-identically")
{
    const auto csv = scratch("mc.csv");
    const auto replayed = scratch("mc_replayed.csv");
    std::filesystem::remove(csv);
    std::filesystem::remove(replayed);
    const Result r = run_cli({"curve", "--scenario", kToy, "--method", "mc", "--trials", "20000", "--seed", "9",
                              "--out", csv.string()});
    REQUIRE(r.code == cli::kExitOk);
    const auto manifest = csv.string() + ".manifest.json";
    REQUIRE(std::filesystem::exists(manifest));
    CHECK_THAT(slurp(manifest), ContainsSubstring("\"seeds\": [\n    9\n  ]"));

    const Result again = run_cli({"replay", manifest, "--out", replayed.string()});
    CHECK(again.code == cli::kExitOk);
    CHECK_THAT(again.out, ContainsSubstring("all byte-identical"));
    CHECK(slurp(replayed) == slurp(csv));

    const Result check_only = run_cli({"replay", manifest});
    CHECK(check_only.code == cli::kExitOk);

    CHECK(run_cli({"replay", "/nonexistent.json"}).code == cli::kExitIo);
}

TEST_CASE("presets lists the catalog and shows documents")
{
    const Result r = run_cli({"presets"});
    REQUIRE(r.code == cli::kExitOk);
    for (const auto& name : preset_names()) {
        CHECK_THAT(r.out, ContainsSubstring(name + ","));
    }
    const Result shown = run_cli({"presets", "--show", "fig3d"});
    REQUIRE(shown.code == cli::kExitOk);
    CHECK(parse_scenario(shown.out) == preset("fig3d_30GHz"));
}

TEST_CASE("csv fields are quoted only when needed")
{
    CHECK(cli::csv_field("plain") == "plain");
    CHECK(cli::csv_field("a,b") == "\"a,b\"");
    CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("fnv1a64 reference values")
{
    CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
