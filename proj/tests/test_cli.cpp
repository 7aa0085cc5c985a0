// Drives the built CLI binary (path in ROTDIST_CLI) through its documented
// surface: exit codes, JSON schema, determinism, and the cache file.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

std::string cli_path() {
    const char* env = std::getenv("ROTDIST_CLI");
    REQUIRE(env != nullptr);
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = (std::filesystem::temp_directory_path() /
                            ("rotdist_cli_out." + std::to_string(getpid()) + ".txt"))
                               .string();
    std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, buf.str()};
}

} // namespace

TEST_CASE("dist command and exit codes") {
    RunResult ra = run("dist --metric ra --t1 \"((* *) *)\" --t2 \"(* (* *))\"");
    CHECK(ra.exit_code == 0);
    CHECK(ra.out.find("distance=1") != std::string::npos);

    RunResult undef = run(
        "dist --metric rra --gens x0,x2 --t1 \"(* (* (* *)))\" --t2 \"(* ((* *) *))\"");
    CHECK(undef.exit_code == 1);
    CHECK(undef.out.find("defined=false") != std::string::npos);

    RunResult zero = run("dist --metric rr --t1 \"((* *) *)\" --t2 \"((* *) *)\"");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find("distance=0") != std::string::npos);

    CHECK(run("dist --metric ra --t1 \"((* *)\" --t2 \"(* (* *))\"").exit_code == 2);
    CHECK(run("dist --metric ra --t1 \"(* *)\" --t2 \"(* (* *))\"").exit_code == 2);
    CHECK(run("dist --metric bogus --t1 \"(* *)\" --t2 \"(* *)\"").exit_code == 2);
    CHECK(run("dist --metric rra --t1 \"(* *)\" --t2 \"(* *)\"").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("dist json schema and determinism") {
    std::string args =
        "dist --metric rr --t1 \"(* (* (* *)))\" --t2 \"((* (* *)) *)\" --witness --json";
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    json parsed = json::parse(first.out);
    CHECK(parsed["n"] == 3);
    CHECK(parsed["genset"] == "x0,x1");
    CHECK(parsed["defined"] == true);
    CHECK(parsed["distance"].is_number_integer());
    CHECK(parsed["witness"].is_array());

    json no_witness =
        json::parse(run("dist --metric rr --t1 \"(* *)\" --t2 \"(* *)\" --json").out);
    CHECK(no_witness["witness"].is_null());
    CHECK(no_witness["distance"] == 0);
}

TEST_CASE("nf command") {
    RunResult nf = run("nf --word \"x0 x2 x0^-1\"");
    CHECK(nf.exit_code == 0);
    CHECK(nf.out.find("unique:  x1") != std::string::npos);
    CHECK(nf.out.find("partial: x0 x2 x0^-1") != std::string::npos);
    CHECK(nf.out.find("length:  1") != std::string::npos);

    RunResult pair = run("nf --t1 \"(* (* *))\" --t2 \"((* *) *)\"");
    CHECK(pair.exit_code == 0);
    CHECK(pair.out.find("unique:  x0") != std::string::npos);

    RunResult empty = run("nf --word \"\"");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("length:  0") != std::string::npos);

    CHECK(run("nf --word \"x0 bogus\"").exit_code == 2);
}

TEST_CASE("verify command") {
    RunResult pass = run("verify --check sharp-rr --n 3..4");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("PASS: sharp-rr n=3") != std::string::npos);
    CHECK(pass.out.find("PASS: sharp-rr n=4") != std::string::npos);

    RunResult gt = run("verify --check gtables --n 1..4 --json");
    CHECK(gt.exit_code == 0);
    json parsed = json::parse(gt.out);
    CHECK(parsed[0]["pass"] == true);
    CHECK(parsed[0]["data"]["mismatched"] == 0);

    CHECK(run("verify --check bogus").exit_code == 2);
}

TEST_CASE("family command") {
    // badword's true distance (10, by BFS) misses its predicted bound (16),
    // so certification reports FAIL and exits nonzero.
    RunResult fam = run("family --name badword --m 1 --n 6 --certify");
    CHECK(fam.exit_code == 1);
    CHECK(fam.out.find("word:    x3 x4 x3^-1 x2^-1") != std::string::npos);
    CHECK(fam.out.find("lower:   16") != std::string::npos);
    CHECK(fam.out.find("distance=10") != std::string::npos);
    CHECK(fam.out.find("FAIL") != std::string::npos);

    RunResult lw = run("family --name longra --n 5");
    CHECK(lw.exit_code == 0);
    CHECK(lw.out.find("x0 x1 x2 x3 x2^-1 x1^-1 x0^-2") != std::string::npos);

    RunResult lc = run("family --name longra --n 6 --certify");
    CHECK(lc.exit_code == 0);
    CHECK(lc.out.find("distance=10") != std::string::npos);
    CHECK(lc.out.find("PASS") != std::string::npos);

    CHECK(run("family --name badword --m 1 --n 5").exit_code == 2);
    CHECK(run("family --name nosuch --n 5").exit_code == 2);
}

TEST_CASE("distance cache round trip") {
    std::string dir =
        (std::filesystem::temp_directory_path() / "rotdist_cache_test").string();
    std::filesystem::remove_all(dir);
    std::string args = "dist --metric rr --t1 \"(* (* *))\" --t2 \"((* *) *)\" --cache " + dir;
    RunResult first = run(args);
    CHECK(first.exit_code == 0);
    std::ifstream csv(dir + "/distances.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "n,genset,tree_a,tree_b,distance");
    std::string row;
    std::getline(csv, row);
    CHECK(row == "2,\"x0,x1\",(* (* *)),((* *) *),1");

    // Second run hits the cache and prints the same result.
    RunResult second = run(args);
    CHECK(second.exit_code == 0);
    CHECK(second.out.find("distance=1") != std::string::npos);

    // Undefined distances are cached as such.
    std::string undef_args =
        "dist --metric rra --gens x0,x2 --t1 \"(* (* (* *)))\" --t2 \"(* ((* *) *))\" --cache " +
        dir;
    CHECK(run(undef_args).exit_code == 1);
    CHECK(run(undef_args).exit_code == 1);
    std::ifstream csv2(dir + "/distances.csv");
    std::stringstream buf;
    buf << csv2.rdbuf();
    CHECK(buf.str().find("undefined") != std::string::npos);
    std::filesystem::remove_all(dir);
}
