#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(QUADDYN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cli common-preper") {
    auto r = run_cli("common-preper --c1 0 --c2 -1 --bound 4");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["distinct_common_count"] == 3);
    CHECK(j["include_infinity_total"] == 4);
    CHECK(j["rational_points"] == json::array({"-1", "0", "1"}));
}

TEST_CASE("cli audit") {
    auto r = run_cli("audit delta");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["verified"] == true);
    auto rb = run_cli("audit b");
    CHECK(json::parse(rb.out)["verified"] == true);
    auto rc = run_cli("audit constants");
    json jc = json::parse(rc.out);
    CHECK(jc["alpha1"] == "1/192");
    CHECK(jc["C2"] == "5/2");
    CHECK(jc["L_arch"] == "1000");
}

TEST_CASE("cli heights and local energy") {
    auto r = run_cli("height --c -29/16");
    json j = json::parse(r.out);
    CHECK(j["height"]["terms"]["29"] == "1");

    auto r2 = run_cli("height2 --c1 -21/16 --c2 -29/16");
    json j2 = json::parse(r2.out);
    CHECK(j2["height2"]["terms"]["29"] == "1");

    auto r3 = run_cli("local-energy --c1 1/625 --c2 126/625 --place 5");
    json j3 = json::parse(r3.out);
    CHECK(j3["exact"] == true);
    CHECK(j3["lower_terms"]["terms"]["5"] == "3/4");
}

TEST_CASE("cli canonical height and disjoint") {
    auto r = run_cli("canonical-height --c -1 --x 0");
    json j = json::parse(r.out);
    CHECK(j["preperiodic"] == true);
    CHECK(j["value"][0] == 0.0);
    CHECK(j["value"][1] == 0.0);

    auto r2 = run_cli("disjoint-at --c1 -2 --c2 -21/10 --p 5");
    CHECK(json::parse(r2.out)["result"] == "disjoint");
    auto r3 = run_cli("disjoint-at --c1 1/5 --c2 6/5 --p 5");
    CHECK(json::parse(r3.out)["result"] == "not_determined");
}

TEST_CASE("cli julia-render determinism") {
    auto r1 = run_cli("julia-render --c -1 --width 64 --height 64 --out /tmp/qd_j1.ppm");
    auto r2 = run_cli("julia-render --c -1 --width 64 --height 64 --out /tmp/qd_j2.ppm");
    CHECK(r1.status == 0);
    CHECK(r2.status == 0);
    std::string a = slurp("/tmp/qd_j1.ppm"), b = slurp("/tmp/qd_j2.ppm");
    CHECK(a.size() == std::string("P6\n64 64\n255\n").size() + 64 * 64 * 3);
    CHECK(a == b);
    CHECK(a.substr(0, 3) == "P6\n");
}

TEST_CASE("cli pairing determinism and seed handling") {
    std::string args = "pairing --c1 1/3 --c2 -1/2 --mc-samples 2000 --seed 7";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.status == 0);
    CHECK(r1.out == r2.out);  // byte-identical for identical argv
    json j = json::parse(r1.out);
    CHECK(j["contributing_primes"] == json::array({"2", "3"}));
    CHECK(j["arch"]["seed"] == 7);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("height --c 1.5").status == 2);  // rational literals have no decimals
    auto r = run_cli("common-preper --c1 0 --c2 0 --bound 3");
    CHECK(r.status == 1);  // computation error with a JSON error object
    CHECK(json::parse(r.out).contains("error"));
    CHECK(run_cli("height").status == 2);  // missing required option
}

TEST_CASE("cli bounds-check") {
    {
        std::ofstream f("/tmp/qd_corpus.csv");
        f << "c1,c2\n0,-1\n-21/16,-29/16\n";
    }
    auto r = run_cli("bounds-check --corpus /tmp/qd_corpus.csv --mc-samples 2000");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["rows"].size() == 2);
}

TEST_CASE("cli seed environment variable") {
    std::string base = std::string(QUADDYN_CLI_PATH);
    auto run_env = [&](const std::string& env, const std::string& args) {
        std::string cmd = env + " " + base + " " + args + " 2>/dev/null";
        std::array<char, 4096> buf{};
        std::string out;
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
        pclose(p);
        return out;
    };
    json a = json::parse(run_env("QUADDYN_SEED=123", "pairing --c1 0 --c2 -1 --mc-samples 1000"));
    CHECK(a["arch"]["seed"] == 123);
    // --seed overrides the environment
    json b = json::parse(
        run_env("QUADDYN_SEED=123", "pairing --c1 0 --c2 -1 --mc-samples 1000 --seed 9"));
    CHECK(b["arch"]["seed"] == 9);
}

TEST_CASE("cli local-energy at the archimedean place") {
    auto r = run_cli("local-energy --c1 0 --c2 -2 --place inf --mc-samples 5000 --seed 3");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["place"] == "inf");
    double mean = j["mean"];
    double se = j["stderr"];
    CHECK(std::abs(mean - 0.3230659472194505) <= 3.0 * se + 1e-2);
}

TEST_CASE("cli json outputs reparse to identical values") {
    auto r = run_cli("pairing --c1 -21/16 --c2 -29/16 --mc-samples 1000 --seed 5");
    json j = json::parse(r.out);
    CHECK(json::parse(j.dump()) == j);  // numeric fields round-trip
    CHECK(j["locals"][0]["lower_terms"]["terms"]["2"] == "1/16");
}

TEST_CASE("cli sample dump and battery report formats") {
    auto r = run_cli("sample-equilibrium --c 0 --count 5");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("re,im\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') lines++;
    CHECK(lines == 6);

    auto b = run_cli("distortion-battery --c 26 --samples 2000");
    CHECK(b.status == 0);
    json jb = json::parse(b.out);
    CHECK(jb["claims"].size() >= 14);
    for (auto& cl : jb["claims"]) {
        CHECK(cl.contains("claim"));
        CHECK(cl.contains("observed"));
        CHECK(cl.contains("bound"));
        CHECK(cl.contains("sigma"));
        CHECK(cl.contains("pass"));
    }
}
