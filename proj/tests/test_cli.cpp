#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

std::string cli() {
    const char* path = std::getenv("TRIDOM_CLI");
    REQUIRE_MESSAGE(path != nullptr, "TRIDOM_CLI must point at the CLI binary");
    return path;
}

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    std::string command = cli() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("gen emits the grid") {
    RunResult r = run("gen --k 2 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["vertices"].size() == 7);
    CHECK(j["edges"].size() == 12);

    RunResult dot = run("gen --k 1 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("v0") != std::string::npos);
    CHECK(dot.output.find(" -- ") == std::string::npos);  // single node, no edges

    RunResult tikz = run("gen --k 3 --format tikz");
    CHECK(tikz.exit_code == 0);
    CHECK(tikz.output.find("\\begin{tikzpicture}") == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("gen --k 0").exit_code == 2);
    CHECK(run("gen --k -3").exit_code == 2);
    CHECK(run("gen --k 2 --format bogus").exit_code == 2);
    CHECK(run("gen").exit_code == 2);
    CHECK(run("frobnicate --k 2").exit_code == 2);
    CHECK(run("solve --k 6..2").exit_code == 2);
    CHECK(run("propagate --k 3 --set /nonexistent.json").exit_code == 2);
}

TEST_CASE("construct prints the set and verifies") {
    RunResult r = run("construct --k 3");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output) == nlohmann::json::parse("[[1,1,2]]"));

    CHECK(run("construct --k 1").output == "[[0,0,0]]\n");
    CHECK(run("construct --k 6 --verify").exit_code == 0);
    CHECK(run("construct --k 37 --verify").exit_code == 0);
}

TEST_CASE("solve reports matches against ceil(k/3)") {
    RunResult r = run("solve --k 1..4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("NO") == std::string::npos);
    CHECK(r.output.find("unresolved") == std::string::npos);

    RunResult capped = run("solve --k 4 --size-cap 1");
    CHECK(capped.exit_code == 0);  // unresolved is not a failure
    CHECK(capped.output.find("unresolved") != std::string::npos);

    RunResult sym = run("solve --k 4 --symmetry");
    CHECK(sym.exit_code == 0);
    RunResult serial = run("solve --k 4 --serial");
    CHECK(serial.exit_code == 0);
}

TEST_CASE("radius query") {
    RunResult r = run("radius --k 4");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["dominating"] == true);
    CHECK(j["radius"] == 10);

    RunResult t = run("radius --k 3 --triangle");
    CHECK(nlohmann::json::parse(t.output)["radius"] == 7);
}

TEST_CASE("propagate trace is valid JSONL") {
    RunResult r = run("propagate --k 3");
    CHECK(r.exit_code == 0);
    size_t lines = 0, pos = 0;
    while ((pos = r.output.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 19);
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const std::string& args :
         {std::string("gen --k 3 --format dot"), std::string("shift-demo --k 4 --seed 7"),
          std::string("shift-demo --k 4 --seed 7 --format json"),
          std::string("solve --k 1..3"), std::string("experiments --k 2..3 --samples 50 --pds-samples 5")}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("experiments pass on a small range") {
    RunResult r = run("experiments --k 2..4 --seed 0 --samples 100 --pds-samples 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
}
