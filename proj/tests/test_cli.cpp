#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

#include "holorec/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HOLOREC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/holorec_test_") + name;
}

} // namespace

TEST_CASE("derive --json emits the documented schema") {
    RunResult r = run_cli("derive --expr \"1/sqrt(1-2*x-7*x^2)\" --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["class"]["type"] == "inverse-root");
    CHECK(j["ode"]["order"] == 1);
    CHECK(j["recurrence"]["span"] == 2);
    CHECK(j["recurrence"]["stride"] == 1);
}

TEST_CASE("derive --class flags") {
    RunResult r = run_cli("derive --class log-rational --q \"1\" --v \"1-x\"");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("log-rational") != std::string::npos);
}

TEST_CASE("derive rejects unsupported input with exit 2") {
    RunResult r = run_cli("derive --expr \"sqrt(x)\"");
    CHECK(r.exit_code == 2);
    RunResult syntax = run_cli("derive --expr \"1+\"");
    CHECK(syntax.exit_code == 2);
}

TEST_CASE("gen formats") {
    RunResult csv = run_cli("gen --expr \"1/sqrt(1-4*x)\" -n 5 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out == "1,2,6,20,70,252\n");

    RunResult egf = run_cli("gen --expr \"exp(x/(1-x))\" -n 5 --egf --format lines");
    REQUIRE(egf.exit_code == 0);
    CHECK(egf.out == "1\n1\n3\n13\n73\n501\n");

    RunResult lgf = run_cli("gen --expr \"log((1)/(1-x))\" -n 3 --lgf --format lines");
    REQUIRE(lgf.exit_code == 0);
    CHECK(lgf.out == "1\n1\n1\n");

    RunResult bf = run_cli("gen --expr \"1/sqrt(1-4*x)\" -n 3 --format bfile");
    REQUIRE(bf.exit_code == 0);
    CHECK(bf.out == "0 1\n1 2\n2 6\n3 20\n");

    // EGF integrality is enforced unless --allow-rational
    RunResult frac = run_cli("gen --expr \"1/(1-x/2)\" -n 3 --egf");
    CHECK(frac.exit_code == 3);
    RunResult ok = run_cli("gen --expr \"1/(1-x/2)\" -n 3 --egf --allow-rational");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("check against a b-file") {
    std::string path = temp_path("a000984.txt");
    {
        std::ofstream out(path);
        out << "# central binomial\n";
        out << "1 1\n2 2\n3 6\n4 20\n5 70\n";
    }
    RunResult ok = run_cli("check --expr \"1/sqrt(1-4*x)\" --bfile " + path + " --offset 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "OK 5 terms\n");

    {
        std::ofstream out(path);
        out << "1 1\n2 2\n3 6\n4 21\n5 70\n";
    }
    RunResult bad = run_cli("check --expr \"1/sqrt(1-4*x)\" --bfile " + path + " --offset 1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("index 4") != std::string::npos);

    RunResult missing = run_cli("check --expr \"1/sqrt(1-4*x)\" --bfile /nonexistent/f");
    CHECK(missing.exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("derive --shorten pipeline") {
    RunResult r = run_cli(
        "derive --expr \"(1-2*x-3*x^2-(1-x)*sqrt(1-2*x-7*x^2))/(8*x^3)\" --shorten --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["recurrence"]["span"] == 3);
    CHECK(j["shortened"]["span"] == 2);
}
