#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "anc/census.hpp"

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(ANC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, got);
    int rc = ::pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() /
               ("anc-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("cli complexity") {
    CmdResult r = run_cli("complexity 01");
    CHECK(r.status == 0);
    CHECK(r.out.find("A_N=2") != std::string::npos);

    CHECK(run_cli("complexity 0000000000").out.find("A_N=1") != std::string::npos);
    CHECK(run_cli("complexity \"\"").out.find("A_N=1") != std::string::npos);

    CmdResult bad = run_cli("complexity 012");
    CHECK(bad.status != 0);

    CmdResult full = run_cli("complexity 0110 --emit-run --emit-dot");
    CHECK(full.status == 0);
    CHECK(full.out.find("run=") != std::string::npos);
    CHECK(full.out.find("digraph") != std::string::npos);

    CHECK(run_cli("complexity 01 --upper-bound 1").status != 0);
}

TEST_CASE("cli census and cache") {
    auto dir = scratch_dir();
    std::string base = "census 3 --cache-dir " + dir.string();

    CmdResult table = run_cli(base);
    CHECK(table.status == 0);
    CHECK(table.out.find("max_count=6") != std::string::npos);
    CHECK(std::filesystem::exists(anc::census_cache_path(dir, 3)));

    CmdResult csv = run_cli(base + " --format csv");
    CHECK(csv.status == 0);
    anc::CensusTable parsed = anc::parse_census_csv(csv.out);
    CHECK(parsed.length == 3);
    CHECK(parsed.s.at(2) == 6);

    CmdResult jsonl = run_cli(base + " --format json-lines");
    CHECK(anc::parse_census_jsonl(jsonl.out) == parsed);

    // second run serves the cached table byte-for-byte
    CHECK(run_cli(base + " --format csv").out == csv.out);

    // over the feasibility limit without --force
    CHECK(run_cli("census 17 --cache-dir " + dir.string()).status != 0);

    std::filesystem::remove_all(dir);
}

TEST_CASE("cli limits") {
    CmdResult r = run_cli("limits 4 --per-leading-bit");
    CHECK(r.status == 0);
    CHECK(r.out.find("4\t29") != std::string::npos);
    CHECK(r.out.find("3\t10") != std::string::npos);

    CmdResult withr = run_cli("limits 4 --with-r");
    CHECK(withr.out.find("provisional") != std::string::npos);
    CHECK(withr.out.find("4\t58") != std::string::npos);
}

TEST_CASE("cli periodic") {
    CmdResult r = run_cli("periodic 6");
    CHECK(r.status == 0);
    CHECK(r.out.find("6\t10\t9") != std::string::npos); // Z(6)=10, necklaces=9
}

TEST_CASE("cli verify") {
    CmdResult ok = run_cli("verify --small-n-limit 4");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("ok   search-oracle") != std::string::npos);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    auto dir = scratch_dir();
    auto bad_file = dir / "bad-oeis.txt";
    {
        std::ofstream out(bad_file);
        out << "0,0,2,99\n"; // wrong value at index 3
    }
    CmdResult bad = run_cli("verify --small-n-limit 3 --oeis-file " + bad_file.string());
    CHECK(bad.status != 0);
    CHECK(bad.out.find("FAIL periodic-count-reference") != std::string::npos);
    std::filesystem::remove_all(dir);
}
