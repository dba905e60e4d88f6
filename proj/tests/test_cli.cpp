#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fredkin/entanglement.hpp"
#include "fredkin/solver.hpp"
#include "fredkin/states.hpp"
#include "json.hpp"

using namespace fredkin;
using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(FREDKIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// strips "# ..." provenance lines
std::string data_lines(const std::string& text) {
    std::istringstream is(text);
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line))
        if (line.empty() || line[0] != '#') os << line << '\n';
    return os.str();
}

}  // namespace

TEST_CASE("spectrum reports ground energy, gap and degeneracy", "[cli]") {
    RunResult r = run_cli("spectrum --sites 6");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["provenance"]["version"] == version);
    REQUIRE(j["provenance"]["config"]["command"] == "spectrum");
    REQUIRE(j["boundary"] == "open");
    REQUIRE(j["degeneracy"] == 1);
    REQUIRE(std::abs(j["eigenvalues"][0].get<double>()) <= 1e-10);
    double want_gap = spectral_gap(6, BoundarySpec::open(), ModelForm::Projector);
    REQUIRE(j["gap"].get<double>() == Catch::Approx(want_gap).margin(1e-10));
}

TEST_CASE("periodic spectrum shows the measured kernel degeneracy", "[cli]") {
    RunResult r = run_cli("spectrum --sites 5 --periodic --count 12");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["boundary"] == "periodic");
    REQUIRE(j["degeneracy"] == 6);  // N + 1 zero modes at odd N
    REQUIRE(j["gap"].get<double>() > 0.0);
}

TEST_CASE("reruns are byte identical", "[cli]") {
    for (const char* args : {"spectrum --sites 6 --format json",
                             "entropy --sites 12 --format csv",
                             "orbits --sites 5 --periodic"}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        REQUIRE(a.status == 0);
        REQUIRE(a.out == b.out);
        REQUIRE_FALSE(a.out.empty());
    }
}

TEST_CASE("entropy CSV carries provenance and exact values", "[cli]") {
    RunResult r = run_cli("entropy --sites 8 --cut 4 --format csv");
    REQUIRE(r.status == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    REQUIRE(line == std::string("# fredkin ") + version);
    std::getline(is, line);
    REQUIRE(line.rfind("# config: command=entropy sites=8", 0) == 0);
    std::getline(is, line);
    REQUIRE(line == "N,L,k,S_exact,S_asymptotic,rank,height_expectation");
    std::getline(is, line);
    REQUIRE(line.rfind("8,4,1,", 0) == 0);
    double s_exact = std::stod(line.substr(6));
    REQUIRE(s_exact == Catch::Approx(entropy(schmidt_exact(4, 4))).margin(1e-9));
}

TEST_CASE("entropy modes agree where they should", "[cli]") {
    RunResult svd = run_cli("entropy --sites 10 --cut 5 --mode svd --format json");
    RunResult formula = run_cli("entropy --sites 10 --cut 5 --mode formula --format json");
    REQUIRE(svd.status == 0);
    REQUIRE(formula.status == 0);
    double s_svd = json::parse(svd.out)["rows"][0]["S_exact"].get<double>();
    double s_formula = json::parse(formula.out)["rows"][0]["S_exact"].get<double>();
    REQUIRE(s_svd == Catch::Approx(s_formula).margin(1e-9));

    RunResult asym = run_cli("entropy --sites 10 --cut 5 --mode asymptotic --format json");
    json row = json::parse(asym.out)["rows"][0];
    REQUIRE(row["S_exact"] == row["S_asymptotic"]);  // estimate-only mode
}

TEST_CASE("state dumps round trip through the parser", "[cli]") {
    RunResult r = run_cli("state --sites 6");
    REQUIRE(r.status == 0);
    std::istringstream is(data_lines(r.out));
    Vector v = load_state(is, 6);
    REQUIRE((v - dyck_state(3)).cwiseAbs().maxCoeff() == 0.0);

    RunResult anom = run_cli("state --sites 4 --anomalous");
    std::istringstream ais(data_lines(anom.out));
    Vector av = load_state(ais, 4);
    REQUIRE((av - anomalous_state(2)).cwiseAbs().maxCoeff() == 0.0);

    RunResult colored = run_cli("state --sites 4 --colors 2");
    std::istringstream cis(data_lines(colored.out));
    Vector cv = load_state(cis, 4, 2);
    REQUIRE((cv - colored_dyck_state(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("orbit census prints counts and verifies the kernel match", "[cli]") {
    RunResult r = run_cli("orbits --sites 6 --periodic --verify");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("# orbit_count=8") != std::string::npos);
    REQUIRE(r.out.find("# verified: kernel_dim=8 orbit_count=8") != std::string::npos);

    RunResult open = run_cli("orbits --sites 4");
    REQUIRE(open.out.find("# orbit_count=9") != std::string::npos);
    std::istringstream is(data_lines(open.out));
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    REQUIRE(rows == 9);
}

TEST_CASE("mps and magnon verifications pass", "[cli]") {
    RunResult mps = run_cli("mps --sites 12 --verify");
    REQUIRE(mps.status == 0);
    REQUIRE(data_lines(mps.out) ==
            "chi,exact_chi,max_abs_error,lost_words\n7,7,0,0\n");

    RunResult magnon = run_cli("magnon --sites 8 --verify");
    REQUIRE(magnon.status == 0);
    REQUIRE(magnon.out.find("# sector_class=(6,0) lambda=0.5 closure_residual=0 "
                            "max_spectrum_diff=0") != std::string::npos);
}

TEST_CASE("phase diagram table includes the domain wall quadrant", "[cli]") {
    RunResult r = run_cli("phase --sites 6 --verify");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("sign_alpha,sign_beta,degeneracy,magnitude_invariant,"
                       "identification,fidelity") != std::string::npos);
    REQUIRE(r.out.find("-1,-1,5,1,\"domain walls )^a(^b, a,b >= 1\",1") !=
            std::string::npos);
}

TEST_CASE("config errors exit 2, cap violations exit 4", "[cli]") {
    REQUIRE(run_cli("spectrum --sites 1").status == 2);
    REQUIRE(run_cli("entropy --sites 7").status == 2);      // odd chain
    REQUIRE(run_cli("entropy --sites 8 --cut 9").status == 2);
    REQUIRE(run_cli("state --sites 3 --class 0,0").status == 2);  // empty class
    REQUIRE(run_cli("spectrum --sites 6 --bogus-flag").status == 2);
    REQUIRE(run_cli("spectrum --sites 6 --colors 2 --periodic").status == 2);
    REQUIRE(run_cli("spectrum --sites 40").status == 4);  // basis cap
    RunResult help = run_cli("--help");
    REQUIRE(help.status == 0);
    REQUIRE(help.out.find("spectrum") != std::string::npos);
}

TEST_CASE("output lands in --out unchanged", "[cli]") {
    std::string path = "/tmp/fredkin_cli_out_test.csv";
    std::remove(path.c_str());
    RunResult direct = run_cli("entropy --sites 8 --cut 4");
    RunResult filed = run_cli("entropy --sites 8 --cut 4 --out " + path);
    REQUIRE(filed.status == 0);
    REQUIRE(filed.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    REQUIRE(content.str() == direct.out);
    std::remove(path.c_str());
}
