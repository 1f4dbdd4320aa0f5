#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "hypercheb/hypercheb.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("HYPERCHEB_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run_cli(const std::string& args) {
    RunResult res;
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("surface --poly prints the exact invariant") {
    const RunResult r = run_cli("surface --m 3 --poly");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x^3 + y^3 + z^3 - 3*x*y*z\n");
    const RunResult r2 = run_cli("surface --m 2 --poly");
    CHECK(r2.out == "x^2 - y^2\n");
}

TEST_CASE("surface --grid emits an on-surface point cloud") {
    const RunResult r = run_cli("surface --m 3 --grid -1,1,5");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["m"] == 3);
    REQUIRE(doc["points"].size() == 5);
    for (const auto& p : doc["points"]) {
        REQUIRE(p.size() == 3);
        const std::vector<hypercheb::Complex> pt = {
            hypercheb::Complex(p[0].get<double>(), 0.0),
            hypercheb::Complex(p[1].get<double>(), 0.0),
            hypercheb::Complex(p[2].get<double>(), 0.0)};
        CHECK(hypercheb::demoivre::on_surface(3, pt, 1e-9));
    }
}

TEST_CASE("cheb --coeffs emits canonical polynomials") {
    const RunResult r = run_cli("cheb --m 3 --kind 0 --n 2 --coeffs");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x^2 + 2*y*z\n");
    const RunResult r2 = run_cli("cheb --m 2 --n 3 --coeffs");
    CHECK(r2.out == "x^3 + 3*x*y^2\n");
}

TEST_CASE("cheb --table is a deterministic CSV") {
    const RunResult r = run_cli("cheb --m 3 --alpha 0.5,0.25 --n 6 --table");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "n,");
    // 1 header + 7 rows
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
    const RunResult again = run_cli("cheb --m 3 --alpha 0.5,0.25 --n 6 --table");
    CHECK(again.out == r.out);
}

TEST_CASE("genfun JSON round-trips into library values") {
    const RunResult r = run_cli("genfun --stream 1 --alpha 0.52,-0.18 --terms 10");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["stream"] == 1);
    REQUIRE(doc["series"].size() == 10);

    using namespace hypercheb;
    using namespace hypercheb::cheb;
    const Complex alpha(0.52, -0.18);
    const StreamSequence seq = recurrence_eval(3, alpha, 10);
    const auto ser = gf_series_numeric(genfun(1), seq.x, seq.xstar, seq.xstarstar, 10);
    for (int n = 0; n < 10; ++n) {
        const Complex got(doc["series"][n][0].get<double>(), doc["series"][n][1].get<double>());
        CHECK(std::abs(got - ser[static_cast<size_t>(n)]) < 1e-12);
    }
    // symbolic form carries the closed numerator/denominator
    const RunResult sym = run_cli("genfun --stream 0 --terms 5");
    const auto sdoc = nlohmann::json::parse(sym.out);
    CHECK(sdoc["denominator"][1] == "-3*x");
    CHECK(sdoc["numerator"][1] == "-2*x");
    CHECK(sdoc["series"][2] == "3*x^2 - 2*xstar");
}

TEST_CASE("companion orbit and matrix power") {
    const RunResult r = run_cli("companion --alphas 1,1 --seeds 0,1 --n 10 --orbit");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("10,55\n") != std::string::npos);

    const RunResult p = run_cli("companion --alphas 1,1 --seeds 0,1 --matrix-power 5");
    REQUIRE(p.exit_code == 0);
    const auto doc = nlohmann::json::parse(p.out);
    CHECK(doc["matrix"][0][0] == "8");
    CHECK(doc["matrix"][0][1] == "5");
    CHECK(doc["matrix"][1][1] == "3");

    const RunResult rat =
        run_cli("companion --alphas 1/2,1/3 --seeds 1,1 --n 4 --orbit");
    REQUIRE(rat.exit_code == 0);
    CHECK(rat.out.find("2,5/6\n") != std::string::npos);  // 1/3 + 1/2
}

TEST_CASE("lucas sequence output and identify report") {
    const RunResult r = run_cli("lucas --roots 1,2,3 --which V --n 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("0,3,") != std::string::npos);
    CHECK(r.out.find("2,14,") != std::string::npos);

    const RunResult id = run_cli("lucas --roots 1,2,4 --identify --n 5");
    REQUIRE(id.exit_code == 0);
    const auto doc = nlohmann::json::parse(id.out);
    REQUIRE(doc["residuals"].size() == 6);
    for (const auto& row : doc["residuals"]) {
        CHECK(row["resid_v"].get<double>() <= 1e-9);
        CHECK(row["resid_u"].get<double>() <= 1e-9);
        CHECK(row["resid_w"].get<double>() <= 1e-9);
    }
}

TEST_CASE("exit codes distinguish usage, domain and verification errors") {
    CHECK(run_cli("verify --suites nosuchsuite").exit_code == 2);
    CHECK(run_cli("cheb --m 5 --n 2 --coeffs").exit_code == 2);
    CHECK(run_cli("cheb --m 3 --n 2").exit_code == 2);  // no mode chosen
    CHECK(run_cli("lucas --roots 1,1,1 --which U --n 5").exit_code == 3);   // degenerate roots
    CHECK(run_cli("lucas --roots -1,2,3 --identify --n 3").exit_code == 3); // nonpositive root
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("verify subcommand: single suite runs clean and deterministically") {
    const RunResult a = run_cli("verify --suites lucas --seed 3");
    CHECK(a.exit_code == 0);
    const RunResult b = run_cli("verify --suites lucas --seed 3");
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed=3") != std::string::npos);
    // an absurd tolerance fails by design
    const RunResult tight = run_cli("verify --suites lucas --seed 3 --tol 1e-18");
    CHECK(tight.exit_code == 1);
}
