// File formats and text rendering: the JSON matrix-file format, the
// report document (human table and structured JSON), and the sweep CSV.
#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include <json.hpp>

#include "bellsym/complex_matrix.hpp"
#include "bellsym/entanglement.hpp"
#include "bellsym/errors.hpp"
#include "bellsym/report.hpp"

namespace bellsym {

inline constexpr std::string_view kToolName = "bellsym";
inline constexpr std::string_view kToolVersion = "0.1.0";

inline std::string_view to_string(AtomicMode mode) {
    switch (mode) {
        case AtomicMode::parallel:
            return "parallel";
        case AtomicMode::crossed:
            return "crossed";
        case AtomicMode::twist:
            return "twist";
        case AtomicMode::twist_crossed:
            return "twist-crossed";
    }
    return "parallel";
}

// Locale-independent, round-trip-safe rendering (17 significant digits,
// trailing zeros trimmed).
inline std::string format_number(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// Fixed 6 significant digits for human-readable tables.
inline std::string format_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

inline nlohmann::json matrix_to_json(const ComplexMatrix4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return {{"matrix", rows}};
}

inline ComplexMatrix4 matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("matrix"))
        throw ParseError("matrix file must be an object with a \"matrix\" field");
    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != 4)
        throw ParseError("\"matrix\" must be a 4-element array of rows");
    ComplexMatrix4 m;
    for (int i = 0; i < 4; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != 4)
            throw ParseError("matrix row " + std::to_string(i) + " must have 4 entries");
        for (int j = 0; j < 4; ++j) {
            const auto& entry = row.at(j);
            if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
                !entry.at(1).is_number())
                throw ParseError("matrix entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be a [re, im] number pair");
            m(i, j) = ComplexScalar(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    }
    if (!all_finite(m)) throw ParseError("matrix entries must be finite");
    return m;
}

inline ComplexMatrix4 load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed matrix file " + path + ": " + e.what());
    }
    return matrix_from_json(doc);
}

inline void save_matrix_file(const std::string& path, const ComplexMatrix4& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write matrix file: " + path);
    out << matrix_to_json(m).dump(2) << '\n';
}

// A rendered report with its provenance.
struct ReportDocument {
    std::string input_path;
    ReportConfig config;
    SymmetryReport report;
};

inline nlohmann::json report_to_json(const ReportDocument& doc) {
    nlohmann::json atomic;
    for (const auto& [mode, value] : doc.report.atomic_residuals)
        atomic[std::string(to_string(mode))] = value;
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"input", doc.input_path},
            {"grid", {{"angle", doc.config.angle_grid}, {"atomic", doc.config.atomic_grid}}},
            {"report",
             {{"hermiticity_residual", doc.report.hermiticity_residual},
              {"trace_residual", doc.report.trace_residual},
              {"min_eigenvalue", doc.report.min_eigenvalue},
              {"reduced_a_residual", doc.report.reduced_a_residual},
              {"reduced_b_residual", doc.report.reduced_b_residual},
              {"swap_parties_residual", doc.report.swap_parties_residual},
              {"swap_axes_residual", doc.report.swap_axes_residual},
              {"rotational_residual", doc.report.rotational_residual},
              {"twist_residual", doc.report.twist_residual},
              {"atomic_residuals", atomic},
              {"concurrence", doc.report.concurrence}}}};
}

inline std::string render_report_text(const ReportDocument& doc) {
    std::ostringstream out;
    const auto line = [&](std::string_view label, double value) {
        out << "  " << label;
        for (std::size_t i = label.size(); i < 30; ++i) out << ' ';
        out << format_short(value) << '\n';
    };
    out << kToolName << ' ' << kToolVersion << " report\n";
    out << "input: " << doc.input_path << '\n';
    out << "grid:  " << doc.config.angle_grid << " (angle), " << doc.config.atomic_grid
        << " (atomic)\n\n";
    line("hermiticity residual", doc.report.hermiticity_residual);
    line("trace residual", doc.report.trace_residual);
    line("min eigenvalue", doc.report.min_eigenvalue);
    line("reduced A residual", doc.report.reduced_a_residual);
    line("reduced B residual", doc.report.reduced_b_residual);
    line("swap parties residual", doc.report.swap_parties_residual);
    line("swap axes residual", doc.report.swap_axes_residual);
    line("rotational residual", doc.report.rotational_residual);
    line("twist residual", doc.report.twist_residual);
    for (const auto& [mode, value] : doc.report.atomic_residuals)
        line("atomic [" + std::string(to_string(mode)) + "]", value);
    line("concurrence", doc.report.concurrence);
    return out.str();
}

// Human-readable 4x4 matrix table, entries as re+imi.
inline std::string render_matrix_text(const ComplexMatrix4& m) {
    std::ostringstream out;
    for (int i = 0; i < 4; ++i) {
        out << " ";
        for (int j = 0; j < 4; ++j) {
            const ComplexScalar z = m(i, j);
            std::string cell = format_short(z.real());
            if (z.imag() != 0.0) cell += (z.imag() > 0 ? "+" : "") + format_short(z.imag()) + "i";
            out << ' ';
            for (std::size_t k = cell.size(); k < 14; ++k) out << ' ';
            out << cell;
        }
        out << '\n';
    }
    return out.str();
}

// CSV with a mandatory header, one row per sweep point, and a trailing
// comment row carrying the fitted slope. LF line endings, '.' decimals.
inline std::string sweep_to_csv(const SweepResult& sweep) {
    std::string out = "epsilon,concurrence,atomic_residual\n";
    for (const auto& p : sweep.points) {
        out += format_number(p.epsilon);
        out += ',';
        out += format_number(p.concurrence);
        out += ',';
        out += format_number(p.atomic_residual);
        out += '\n';
    }
    out += "# slope=";
    out += format_number(sweep.slope);
    out += '\n';
    return out;
}

}  // namespace bellsym
