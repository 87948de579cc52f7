#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "coinfock/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p)
{
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run_binary(const std::string& args)
{
    const char* bin = std::getenv("COINFOCK_BIN");
    REQUIRE(bin != nullptr);
    fs::path out = fs::temp_directory_path() / "coinfock_test_out.txt";
    std::string cmd = std::string(bin) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out)};
}

}  // namespace

TEST_CASE("verify-partitions runs clean and deterministically")
{
    auto r1 = run_binary("verify-partitions --L 3 --n-max 3 --seed 7");
    REQUIRE(r1.exit_code == 0);
    auto j = nlohmann::json::parse(r1.out);
    REQUIRE(j["meta"]["seed"] == 7);
    REQUIRE(j["summary"]["total"] == j["summary"]["passed"]);
    for (const auto& c : j["checks"]) {
        REQUIRE(c.contains("name"));
        REQUIRE(c.contains("paper_anchor"));
        REQUIRE(c.contains("residual"));
        REQUIRE(c.contains("bound"));
        REQUIRE(c.contains("pass"));
    }
    auto r2 = run_binary("verify-partitions --L 3 --n-max 3 --seed 7");
    REQUIRE(r2.out == r1.out);
}

TEST_CASE("verify-algebra emits a full report")
{
    auto r = run_binary("verify-algebra --L 3 --n-max 3 --seed 7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["summary"]["total"].get<int>() >= 12);
    REQUIRE(j["summary"]["passed"] == j["summary"]["total"]);
}

TEST_CASE("csv report format")
{
    auto r = run_binary("verify-partitions --L 3 --n-max 2 --seed 1 --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.rfind("name,paper_anchor,residual,bound,pass", 0) == 0);
}

TEST_CASE("config file values are overridden by flags")
{
    fs::path cfg = fs::temp_directory_path() / "coinfock_test.cfg";
    {
        std::ofstream os(cfg);
        os << "L=4\n";
        os << "seed=9\n";
        os << "n-max=2\n";
    }
    auto r = run_binary("verify-partitions --config " + cfg.string() + " --L 3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["meta"]["params"]["L"] == 3);       // flag wins
    REQUIRE(j["meta"]["seed"] == 9);              // from config
    REQUIRE(j["meta"]["params"]["n_max"] == 2);   // from config
}

TEST_CASE("parameter validation exit codes")
{
    REQUIRE(run_binary("spectrum --J 7").exit_code == 2);
    REQUIRE(run_binary("evolve --lambda 0").exit_code == 2);
    REQUIRE(run_binary("nonsense").exit_code == 2);
    REQUIRE(run_binary("verify-partitions --format yaml").exit_code == 2);
}

TEST_CASE("spectrum and evolve emit data files")
{
    fs::path out = fs::temp_directory_path() / "coinfock_spec.csv";
    auto r = run_binary("spectrum --J 16 --R 4 --format csv --out " + out.string());
    REQUIRE(r.exit_code == 0);
    auto text = slurp(out);
    REQUIRE(text.rfind("# {", 0) == 0);
    REQUIRE(text.find("index,eigenvalue") != std::string::npos);

    auto r2 = run_binary("evolve --J 16 --R 4 --format csv");
    REQUIRE(r2.exit_code == 0);
    REQUIRE(r2.out.find("t,norm_total,norm_singular,norm_regular") != std::string::npos);

    auto r3 = run_binary("mixing --J 16 --R 4");
    REQUIRE(r3.exit_code == 0);
    auto j = nlohmann::json::parse(r3.out);
    REQUIRE(j.contains("sweep"));
    REQUIRE(j["min_angle"].get<double>() > 0.0);
}

TEST_CASE("in-process run covers the same paths")
{
    coinfock::cli::RunConfig cfg;
    cfg.command = "spectrum";
    cfg.J = 16;
    cfg.R = 4.0;
    cfg.out_path = (fs::temp_directory_path() / "coinfock_inproc.json").string();
    REQUIRE(coinfock::cli::run(cfg) == 0);
    auto j = nlohmann::json::parse(slurp(cfg.out_path));
    REQUIRE(j["eigenvalues"].size() == 16);

    cfg.command = "evolve";
    cfg.lambda = 0.0;
    REQUIRE(coinfock::cli::run(cfg) == 2);
}
