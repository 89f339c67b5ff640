#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("MHAHN_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "MHAHN_CLI must point at the built binary");
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("tables emits the frozen csv cell") {
    const RunResult r = run_cli("tables --alpha 4 --beta 4 --N 2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,b_n,u_n\n0,-3,0\n1,1,16\n2,-3,16\n\n"
          "s,x_s,omega_s\n0,-7,1\n1,5,1/2\n2,-3,3/2\n\n"
          "n,v_n\n0,3\n1,48\n2,768\n\n"
          "n,Q(x_0),Q(x_1),Q(x_2)\n0,1,1,1\n1,-4,8,0\n2,16,16,-16\n");
}

TEST_CASE("tables json carries the schema tag and exact strings") {
    const RunResult r = run_cli("tables --alpha 4 --beta 4 --N 2");
    CHECK(r.code == 0);
    REQUIRE(!r.out.empty());
    CHECK(r.out.back() == '\n');
    const json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["alpha"] == "4");
    CHECK(j["N"] == 2);
    CHECK(j["grid"][0]["x"] == "-7");
    CHECK(j["norms"][2]["v"] == "768");
    CHECK(j["values"]["entries"][1][0] == "-4");
    CHECK_FALSE(j.contains("values_approx"));
}

TEST_CASE("approx flag adds labelled decimal fields") {
    const RunResult r = run_cli("tables --alpha 4 --beta 4 --N 2 --approx");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["grid"][1]["omega"] == "1/2");
    CHECK(j["grid"][1]["omega_approx"] == 0.5);
}

TEST_CASE("out-of-regime parameters exit with the input code") {
    const RunResult r = run_cli("tables --alpha 4 --beta 4 --N 4");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("malformed rationals exit with the input code") {
    CHECK(run_cli("tables --alpha x/y --beta 4 --N 2").code == 2);
    CHECK(run_cli("verify-h --alpha 1.5 --beta 4 --N 2").code == 2);
}

TEST_CASE("usage errors exit with the input code") {
    CHECK(run_cli("").code == 2);                       // missing subcommand
    CHECK(run_cli("bogus").code == 2);                  // unknown subcommand
    CHECK(run_cli("tables --alpha 4 --N 2").code == 2); // missing required option
    CHECK(run_cli("tables --alpha 4 --beta 5 --N 2 --format yaml").code == 2);
}

TEST_CASE("verification suites succeed on good cells") {
    const RunResult vh = run_cli("verify-h --alpha 3 --beta 2 --N 3");
    CHECK(vh.code == 0);
    const json j = json::parse(vh.out);
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

    CHECK(run_cli("verify-h --alpha 9/2 --beta 13/4 --N 3 --format csv").code == 0);
    CHECK(run_cli("verify-sl --mu-a 1/2 --mu-b 1 --N 2").code == 0);
    CHECK(run_cli("verify-sl --mu-a 3/2 --mu-b 0 --eps-a -1 --eps-b 1 --N 3").code == 0);
}

TEST_CASE("coupling table output") {
    const RunResult r = run_cli("cg --mu-a 1/2 --mu-b 1 --N 2");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["parameter_map"]["alpha"] == "5");
    CHECK(j["parameter_map"]["beta"] == "4");
    CHECK(j["squared"][0][0] == "3/5");
    CHECK(j["columns"][0]["two_eig"] == "-4");
    CHECK(j["columns"][1]["mu_ab"] == "3");
    CHECK(j["sign"][1][0] == 0);

    const RunResult csv = run_cli("cg --mu-a 1/2 --mu-b 1 --N 2 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("k,two_eig,eps_ab,mu_ab,q_ab,phase_row\n", 0) == 0);
}

TEST_CASE("dual representation output") {
    const RunResult r = run_cli("dual-rep --alpha 3 --beta 2 --N 3 --params 1,1,1,1");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["blocks"]["Gamma"].size() == 2);
    CHECK(j["blocks"]["U"].size() == 1);
    CHECK(j["blocks"]["U"][0]["p"] == 1);
    for (const auto& f : j["findings"]) CHECK(f["explained"] == true);

    CHECK(run_cli("dual-rep --alpha 3 --beta 2 --N 3 --params 1,1,1,1 --derive").code == 0);
    CHECK(run_cli("dual-rep --alpha 3 --beta 2 --N 3 --params 1,0,1,1").code == 2);
    CHECK(run_cli("dual-rep --alpha 3 --beta 2 --N 3 --params 1,1").code == 2);
}

TEST_CASE("sweep is deterministic and reports per cell") {
    const std::string args = "sweep --max-n 2 --format csv";
    const RunResult a = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out.rfind("criterion,cell,pass,detail\n", 0) == 0);
    CHECK(a.out.find(",false,") == std::string::npos);

    const RunResult b = run_cli(args);
    CHECK(a.out == b.out);

    const RunResult j = run_cli("sweep --max-n 1 --seed 42");
    CHECK(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed["schema"] == 1);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["seed"] == 42);
}
