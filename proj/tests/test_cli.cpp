// End-to-end checks of the command-line tool: exit codes, output formats,
// and the derive -> check round trip. Each case shells out to the built
// binary (path injected by the build).
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <bellsym/io.hpp>

#include "test_support.hpp"

using Catch::Matchers::WithinAbs;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::filesystem::path work_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "bellsym_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const auto out_path = work_dir() / "stdout.txt";
    const auto err_path = work_dir() / "stderr.txt";
    const std::string cmd = std::string(BELLSYM_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int raw = std::system(cmd.c_str());
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out_path), slurp(err_path)};
}

}  // namespace

TEST_CASE("derive then check round trip", "[cli]") {
    const auto bell_file = (work_dir() / "phi_plus.json").string();

    const RunResult derive = run_cli("derive phi+ --out " + bell_file);
    REQUIRE(derive.exit_code == 0);
    REQUIRE(derive.out.find("d = 0.5") != std::string::npos);
    REQUIRE(derive.out.find("c = 0.5") != std::string::npos);

    const RunResult check = run_cli("check " + bell_file + " --json");
    REQUIRE(check.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(check.out);
    const auto& report = doc.at("report");
    REQUIRE_THAT(report.at("concurrence").get<double>(), WithinAbs(1.0, 1e-10));
    REQUIRE_THAT(report.at("rotational_residual").get<double>(), WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(report.at("atomic_residuals").at("parallel").get<double>(),
                 WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(report.at("trace_residual").get<double>(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("derive reports the other kinds", "[cli]") {
    const RunResult psi = run_cli("derive psi-");
    REQUIRE(psi.exit_code == 0);
    REQUIRE(psi.out.find("d = 0") != std::string::npos);

    const RunResult phim = run_cli("derive phi-");
    REQUIRE(phim.exit_code == 0);
    REQUIRE(phim.out.find("c = -0.5") != std::string::npos);
}

TEST_CASE("check rejects invalid inputs with the right exit codes", "[cli]") {
    const auto garbled = work_dir() / "garbled.json";
    std::ofstream(garbled) << "{ definitely not json";
    REQUIRE(run_cli("check " + garbled.string()).exit_code == 2);

    const auto trace2 = work_dir() / "trace2.json";
    bellsym::save_matrix_file(trace2.string(), 2.0 * ts::phi_plus_matrix());
    const RunResult r = run_cli("check " + trace2.string());
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.err.find("unit trace") != std::string::npos);

    const auto negative = work_dir() / "negative.json";
    bellsym::save_matrix_file(negative.string(), bellsym::build_rho_r(0.6, 0.1));
    const RunResult neg = run_cli("check " + negative.string());
    REQUIRE(neg.exit_code == 3);
    REQUIRE(neg.err.find("positive") != std::string::npos);
}

TEST_CASE("unknown kinds and modes exit with 5", "[cli]") {
    REQUIRE(run_cli("derive chi+").exit_code == 5);

    const auto bell_file = (work_dir() / "phi_plus_modes.json").string();
    REQUIRE(run_cli("derive phi+ --out " + bell_file).exit_code == 0);
    REQUIRE(run_cli("atomic " + bell_file + " --mode sideways").exit_code == 5);
    REQUIRE(run_cli("sweep --c wat --eps-max 0.1 --steps 5 --out " +
                    (work_dir() / "x.csv").string())
                .exit_code == 5);
}

TEST_CASE("atomic residual of the semiclassical state", "[cli]") {
    const auto scr_file = (work_dir() / "scr.json").string();
    bellsym::save_matrix_file(scr_file, ts::semiclassical_matrix());

    const RunResult r = run_cli("atomic " + scr_file + " --mode parallel");
    REQUIRE(r.exit_code == 0);
    REQUIRE_THAT(std::stod(r.out), WithinAbs(0.125, 1e-12));

    const RunResult conc = run_cli("concurrence " + scr_file);
    REQUIRE(conc.exit_code == 0);
    REQUIRE_THAT(std::stod(conc.out), WithinAbs(0.0, 1e-10));
}

TEST_CASE("chsh command", "[cli]") {
    const auto bell_file = (work_dir() / "phi_plus_chsh.json").string();
    REQUIRE(run_cli("derive phi+ --out " + bell_file).exit_code == 0);

    const RunResult standard = run_cli("chsh " + bell_file);
    REQUIRE(standard.exit_code == 0);
    REQUIRE(standard.out.find("S = 2.8284271247461903") != std::string::npos);
    REQUIRE(standard.out.find("quantum excess (S > 2): yes") != std::string::npos);

    // same settings given explicitly in degrees
    const RunResult degrees = run_cli("chsh " + bell_file + " --angles 0 45 22.5 67.5");
    REQUIRE(degrees.exit_code == 0);
    REQUIRE_THAT(std::stod(degrees.out.substr(4)), WithinAbs(2.0 * std::numbers::sqrt2, 1e-10));

    const auto scr_file = (work_dir() / "scr_chsh.json").string();
    bellsym::save_matrix_file(scr_file, ts::semiclassical_matrix());
    const RunResult scr = run_cli("chsh " + scr_file + " --angles 0 0.78539816339744831 "
                                  "0.39269908169872415 1.1780972450961724 --radians");
    REQUIRE(scr.exit_code == 0);
    REQUIRE_THAT(std::stod(scr.out.substr(4)), WithinAbs(std::numbers::sqrt2, 1e-10));
    REQUIRE(scr.out.find("quantum excess (S > 2): no") != std::string::npos);
}

TEST_CASE("sweep writes a deterministic CSV", "[cli]") {
    const auto csv_a = (work_dir() / "sweep_a.csv").string();
    const auto csv_b = (work_dir() / "sweep_b.csv").string();

    REQUIRE(run_cli("sweep --c middle --eps-max 0.1 --steps 11 --out " + csv_a).exit_code == 0);
    REQUIRE(run_cli("sweep --c middle --eps-max 0.1 --steps 11 --out " + csv_b).exit_code == 0);

    const std::string a = slurp(csv_a);
    REQUIRE(a == slurp(csv_b));
    REQUIRE(a.rfind("epsilon,concurrence,atomic_residual\n", 0) == 0);

    const auto fitted_slope = [](const std::string& csv) {
        const auto pos = csv.find("# slope=");
        REQUIRE(pos != std::string::npos);
        return std::stod(csv.substr(pos + 8));
    };
    REQUIRE_THAT(fitted_slope(a), WithinAbs(-6.0, 1e-9));

    const RunResult high = run_cli("sweep --c high --eps-max 0.1 --steps 11 --out " + csv_a);
    REQUIRE(high.exit_code == 0);
    REQUIRE_THAT(fitted_slope(slurp(csv_a)), WithinAbs(-4.0, 1e-9));

    // infeasible parameters
    REQUIRE(run_cli("sweep --c middle --eps-max 0 --steps 11 --out " + csv_a).exit_code == 4);
    REQUIRE(run_cli("sweep --c middle --eps-max 0.3 --steps 11 --out " + csv_a).exit_code == 4);
    REQUIRE(run_cli("sweep --c middle --eps-max 0.1 --steps 1 --out " + csv_a).exit_code == 4);
}
