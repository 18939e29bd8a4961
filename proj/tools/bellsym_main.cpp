// bellsym CLI: validate two-qubit density matrices, report symmetry
// residuals, derive Bell states from the atomic-symmetry constraint,
// compute concurrence and CHSH scores, and sweep the epsilon family.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bellsym/bellsym.hpp>

namespace {

using namespace bellsym;

// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 infeasible
// parameters, 5 unknown kind/mode.
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitUnknownKind = 5;

BellKind parse_kind(const std::string& name) {
    if (name == "phi+") return BellKind::phi_plus;
    if (name == "phi-") return BellKind::phi_minus;
    if (name == "psi+") return BellKind::psi_plus;
    if (name == "psi-") return BellKind::psi_minus;
    throw UnknownKind("unknown Bell kind \"" + name + "\" (expected phi+|phi-|psi+|psi-)");
}

AtomicMode parse_mode(const std::string& name) {
    if (name == "parallel") return AtomicMode::parallel;
    if (name == "crossed") return AtomicMode::crossed;
    if (name == "twist") return AtomicMode::twist;
    if (name == "twist-crossed") return AtomicMode::twist_crossed;
    throw UnknownKind("unknown atomic mode \"" + name +
                      "\" (expected parallel|crossed|twist|twist-crossed)");
}

CChoice parse_c_choice(const std::string& name) {
    if (name == "low") return CChoice::low;
    if (name == "middle") return CChoice::middle;
    if (name == "high") return CChoice::high;
    throw UnknownKind("unknown c choice \"" + name + "\" (expected low|middle|high)");
}

DensityMatrix load_state(const std::string& path) {
    return validate_density(load_matrix_file(path));
}

void cmd_check(const std::string& path, int grid, bool as_json) {
    const DensityMatrix rho = load_state(path);
    const ReportConfig cfg{grid, grid};
    const ReportDocument doc{path, cfg, full_report(rho, cfg)};
    if (as_json)
        std::cout << report_to_json(doc).dump(2) << '\n';
    else
        std::cout << render_report_text(doc);
}

void cmd_derive(const std::string& kind_name, const std::string& out_path) {
    const BellKind kind = parse_kind(kind_name);
    const AtomicSolution sol = solve_atomic(kind);
    std::cout << kind_name << ": d = " << format_number(sol.d) << ", c = " << format_number(sol.c)
              << '\n'
              << render_matrix_text(sol.rho.matrix());
    if (!out_path.empty()) {
        save_matrix_file(out_path, sol.rho.matrix());
        std::cout << "wrote " << out_path << '\n';
    }
}

void cmd_concurrence(const std::string& path) {
    std::cout << format_number(concurrence(load_state(path))) << '\n';
}

void cmd_atomic(const std::string& path, const std::string& mode_name, int grid) {
    const DensityMatrix rho = load_state(path);
    const AtomicMode mode = parse_mode(mode_name);
    std::cout << format_number(atomic_residual(rho, mode, grid)) << '\n';
}

void cmd_chsh(const std::string& path, const std::vector<double>& angle_values,
              bool in_radians) {
    const DensityMatrix rho = load_state(path);
    ChshAngles angles = standard_chsh_angles;
    if (!angle_values.empty()) {
        const auto to_angle = [&](double v) { return in_radians ? radians(v) : degrees(v); };
        angles = {to_angle(angle_values[0]), to_angle(angle_values[1]),
                  to_angle(angle_values[2]), to_angle(angle_values[3])};
    }
    const double s = chsh_score(rho, angles);
    std::cout << "S = " << format_number(s) << '\n'
              << "quantum excess (S > 2): " << (s > 2.0 ? "yes" : "no") << '\n';
}

void cmd_sweep(const std::string& c_name, double eps_max, int steps,
               const std::string& out_path) {
    const CChoice choice = parse_c_choice(c_name);
    const SweepResult sweep = linearity_scan(choice, eps_max, steps);
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write sweep file: " + out_path);
    out << sweep_to_csv(sweep);
    std::cout << "wrote " << sweep.points.size() << " rows to " << out_path
              << ", slope = " << format_number(sweep.slope) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit density-matrix symmetry and entanglement toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kToolVersion));
    app.require_subcommand(1);

    std::string path;
    std::string kind_name;
    std::string mode_name;
    std::string c_name;
    std::string out_path;
    std::vector<double> angle_values;
    bool as_json = false;
    bool in_radians = false;
    int grid = kDefaultAngleGrid;
    double eps_max = 0.0;
    int steps = 0;

    auto* check = app.add_subcommand("check", "Validate a density-matrix file and report all residuals");
    check->add_option("file", path, "matrix file")->required();
    check->add_option("--grid", grid, "angle-grid points for residual scans")
        ->capture_default_str();
    check->add_flag("--json", as_json, "emit the report as JSON");
    check->callback([&] { cmd_check(path, grid, as_json); });

    auto* derive = app.add_subcommand("derive", "Solve the atomic-symmetry constraint for a Bell state");
    derive->add_option("kind", kind_name, "phi+|phi-|psi+|psi-")->required();
    derive->add_option("--out", out_path, "write the density matrix to this file");
    derive->callback([&] { cmd_derive(kind_name, out_path); });

    auto* conc = app.add_subcommand("concurrence", "Concurrence of a density-matrix file");
    conc->add_option("file", path, "matrix file")->required();
    conc->callback([&] { cmd_concurrence(path); });

    auto* atomic = app.add_subcommand("atomic", "Atomic-symmetry residual of a density-matrix file");
    atomic->add_option("file", path, "matrix file")->required();
    atomic->add_option("--mode", mode_name, "parallel|crossed|twist|twist-crossed")->required();
    atomic->add_option("--grid", grid, "grid points per angle axis")->capture_default_str();
    atomic->callback([&] { cmd_atomic(path, mode_name, grid); });

    auto* chsh = app.add_subcommand("chsh", "CHSH correlation score of a density-matrix file");
    chsh->add_option("file", path, "matrix file")->required();
    chsh->add_option("--angles", angle_values, "a a' b b' (degrees unless --radians)")
        ->expected(4);
    chsh->add_flag("--radians", in_radians, "interpret --angles in radians");
    chsh->callback([&] { cmd_chsh(path, angle_values, in_radians); });

    auto* sweep = app.add_subcommand("sweep", "Scan the epsilon family and fit the concurrence slope");
    sweep->add_option("--c", c_name, "low|middle|high")->required();
    sweep->add_option("--eps-max", eps_max, "largest epsilon, in (0, 1/8]")->required();
    sweep->add_option("--steps", steps, "number of grid points (>= 2)")->required();
    sweep->add_option("--out", out_path, "CSV output path")->required();
    sweep->callback([&] { cmd_sweep(c_name, eps_max, steps, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const bellsym::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InfeasibleEpsilon& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const UnknownKind& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnknownKind;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
