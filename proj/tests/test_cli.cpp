#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + HKSUM_CLI_PATH " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("rate: text output carries the 12-digit rates") {
    const RunResult r = run_cli("rate --a 0.5 --p 20 --units db");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("R_orth  = 7.65105169118") != std::string::npos);
    CHECK(r.output.find("R_sym   = 7.40832974077") != std::string::npos);
    CHECK(r.output.find("R_ETW   = 7.23840473933") != std::string::npos);
    CHECK(r.output.find("label   = 3") != std::string::npos);
}

TEST_CASE("rate: db and linear units agree") {
    const RunResult db = run_cli("rate --a 0.5 --p 20 --units db");
    const RunResult lin = run_cli("rate --a 0.5 --p 100 --units linear");
    CHECK(db.exit_code == 0);
    CHECK(db.output == lin.output);
}

TEST_CASE("rate: json output") {
    const RunResult r = run_cli("rate --a 0.5 --p 100 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["r_sym"].get<double>() == Catch::Approx(7.408329740767391).margin(1e-9));
    CHECK(j["r_asym"].get<double>() == Catch::Approx(7.722469408583325).margin(1e-9));
    CHECK(j["r_rs"].get<double>() == j["r_asym"].get<double>());
    CHECK(j["rs_basis"] == "asym");
    CHECK(j["label"] == 3);
    CHECK(j["lambda_sym"].get<double>() == Catch::Approx(1.0 / 150.0).margin(1e-15));
}

TEST_CASE("rate: strong interference exits with code 2") {
    const RunResult r = run_cli("rate --a 1.2 --p 20 --units db");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("strong interference") != std::string::npos);
}

TEST_CASE("rate: nonpositive a exits with code 2") {
    CHECK(run_cli("rate --a 0 --p 10").exit_code == 2);
    CHECK(run_cli("rate --a -0.3 --p 10").exit_code == 2);
}

TEST_CASE("sweep: single-step sweep emits one data row matching rate") {
    const RunResult sweep = run_cli("sweep --p 100 --a-min 0.5 --a-max 0.5 --steps 1");
    REQUIRE(sweep.exit_code == 0);
    std::istringstream lines(sweep.output);
    std::string header, row, extra;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK_FALSE(std::getline(lines, extra));
    CHECK(header == "a,R_sym,R_asym,R_orth,R_ETW");

    // same code path, same 12-digit rendering as the rate command
    const RunResult rate = run_cli("rate --a 0.5 --p 100");
    std::istringstream cells(row);
    std::string a, r_sym, r_asym, r_orth, r_etw;
    std::getline(cells, a, ',');
    std::getline(cells, r_sym, ',');
    std::getline(cells, r_asym, ',');
    std::getline(cells, r_orth, ',');
    std::getline(cells, r_etw, ',');
    CHECK(a == "0.5");
    CHECK(rate.output.find("R_sym   = " + r_sym) != std::string::npos);
    CHECK(rate.output.find("R_asym  = " + r_asym) != std::string::npos);
    CHECK(rate.output.find("R_orth  = " + r_orth) != std::string::npos);
    CHECK(rate.output.find("R_ETW   = " + r_etw) != std::string::npos);
}

TEST_CASE("sweep: empty range exits with code 2") {
    CHECK(run_cli("sweep --p 100 --a-min 0.6 --a-max 0.4").exit_code == 2);
    CHECK(run_cli("sweep --p 100 --steps 0").exit_code == 2);
}

TEST_CASE("sweep: identical configs give byte-identical files") {
    const fs::path f1 = temp_file("hksum_sweep_1.csv");
    const fs::path f2 = temp_file("hksum_sweep_2.csv");
    const std::string args = "sweep --p 17.3 --a-min 0.05 --a-max 0.95 --steps 31 --out ";
    CHECK(run_cli(args + f1.string()).exit_code == 0);
    CHECK(run_cli(args + f2.string()).exit_code == 0);
    const std::string c1 = slurp(f1);
    CHECK(!c1.empty());
    CHECK(c1 == slurp(f2));
    fs::remove(f1);
    fs::remove(f2);
}

TEST_CASE("sweep: svg plot side channel") {
    const fs::path svg = temp_file("hksum_sweep.svg");
    const RunResult r =
        run_cli("sweep --p 100 --a-min 0.1 --a-max 0.9 --steps 9 --out /dev/null --plot " +
                svg.string());
    CHECK(r.exit_code == 0);
    const std::string body = slurp(svg);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("R_sym") != std::string::npos);
    fs::remove(svg);
}

TEST_CASE("region: single-point grid labels the reference point") {
    const RunResult r = run_cli(
        "region --x-min 0.5 --x-max 0.5 --x-steps 1 --y-min 20 --y-max 20 --y-steps 1");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK(header == "x,y,a,p,label,R_sym,R_asym,R_orth");
    CHECK(row.find(",3,") != std::string::npos);  // label column
}

TEST_CASE("region: all points out of domain exits with code 2") {
    const RunResult r = run_cli(
        "region --axes snr-inr --x-min 10 --x-max 10 --x-steps 1 --y-min 20 --y-max 20 "
        "--y-steps 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("region: out-of-domain rows are emitted, not dropped") {
    const RunResult r = run_cli(
        "region --axes snr-inr --x-min 20 --x-max 20 --x-steps 1 --y-min 10 --y-max 20 "
        "--y-steps 2");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0, out_of_domain = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find(",0,") != std::string::npos) ++out_of_domain;
    }
    CHECK(rows == 2);
    CHECK(out_of_domain == 1);
}

TEST_CASE("asymptotics: report prints both crossovers") {
    const fs::path csv = temp_file("hksum_asy.csv");
    const RunResult r = run_cli("asymptotics --steps 21 --out " + csv.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("0.087378") != std::string::npos);
    CHECK(r.output.find("0.236068") != std::string::npos);

    std::istringstream lines(slurp(csv));
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "a,dR_sym,dR_asym,dR_ETW,dR_orth");
    while (std::getline(lines, row)) {
        CHECK(row.rfind(",1") == row.size() - 2);  // dR_orth column is constant 1
    }
    fs::remove(csv);
}

TEST_CASE("verify: the default battery passes with exit 0") {
    const RunResult r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    for (const char* name : {"dominance", "monotonicity", "sym-oracle", "asym-oracle", "etw",
                             "continuity", "asymptote", "conjecture", "ts"}) {
        CHECK(r.output.find(std::string("[PASS] ") + name) != std::string::npos);
    }
}

TEST_CASE("verify: dominance suite passes and failures are recognizable") {
    const RunResult r = run_cli("verify --suite dominance --samples 1500 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] dominance") != std::string::npos);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("verify: small run of several suites") {
    const RunResult r = run_cli("verify --suite continuity --samples 50");
    CHECK(r.exit_code == 0);
    const RunResult r2 = run_cli("verify --suite etw --samples 50");
    CHECK(r2.exit_code == 0);
    const RunResult r3 = run_cli("verify --suite asymptote");
    CHECK(r3.exit_code == 0);
    CHECK(r3.output.find("[PASS] asymptote") != std::string::npos);
}

TEST_CASE("output directory override") {
    const fs::path dir = fs::temp_directory_path() / "hksum_outdir";
    fs::create_directories(dir);
    const RunResult r = run_cli("sweep --p 100 --steps 3 --out env_sweep.csv",
                                "HKSUM_OUTPUT_DIR=" + dir.string() + " ");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "env_sweep.csv"));
    fs::remove_all(dir);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("rate --p 10").exit_code == 2);          // missing --a
    CHECK(run_cli("rate --a 0.5 --p 10 --units pc").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                     // subcommand required
}
