#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>

#include "linwave/identity_suite.hpp"
#include "linwave/matrix_json.hpp"
#include "linwave/oscillator.hpp"
#include "linwave/spectrum.hpp"

namespace {

using namespace linwave;
using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool use_color() { return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr; }

std::string pass_fail(bool passed, bool color) {
    if (!color) return passed ? "PASS" : "FAIL";
    return passed ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.10g", x);
    return buffer;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
    out << text;
}

json report_to_json(const CheckReport& report) {
    json j{{"name", report.name}, {"spin", to_string(report.spin)}, {"passed", report.passed}};
    if (report.witness)
        j["witness"] = {{"location", report.witness->location},
                        {"difference", matrix_to_json(report.witness->difference)}};
    if (report.details) j["details"] = *report.details;
    return j;
}

int run_verify(Spin spin, bool as_json, const std::string& output_path) {
    const SpinModel model = build_model(spin);
    const std::vector<CheckReport> reports = run_all_checks(model);
    bool all_passed = true;
    for (const auto& report : reports) all_passed = all_passed && report.passed;

    std::ostringstream out;
    if (as_json) {
        json j{{"command", "verify"}, {"spin", to_string(spin)}, {"all_passed", all_passed}};
        j["checks"] = json::array();
        for (const auto& report : reports) j["checks"].push_back(report_to_json(report));
        out << j.dump() << "\n";
    } else {
        const bool color = output_path.empty() && use_color();
        out << "spin " << to_string(spin) << ": " << reports.size() << " checks\n";
        for (const auto& report : reports) {
            out << "  [" << pass_fail(report.passed, color) << "] " << report.name;
            if (report.details) out << "  (" << *report.details << ")";
            out << "\n";
            if (report.witness) {
                out << "      at " << report.witness->location << ", difference:\n";
                std::istringstream lines(report.witness->difference.to_string());
                for (std::string line; std::getline(lines, line);)
                    out << "      " << line << "\n";
            }
        }
        out << (all_passed ? "all checks passed\n" : "CHECKS FAILED\n");
    }
    emit(out.str(), output_path);
    return all_passed ? kExitSuccess : kExitCheckFailed;
}

int run_reduce(Spin spin, const std::string& omega, bool as_json, const std::string& output_path) {
    const SpinModel model = build_model(spin);
    const OmegaMode mode = omega == "0" ? OmegaMode::Zero : OmegaMode::Symbolic;
    const OperatorPolynomial hamiltonian = reduce_to_second_order(model, mode);

    std::ostringstream out;
    if (as_json) {
        json j{{"command", "reduce"},
               {"spin", to_string(spin)},
               {"omega", mode == OmegaMode::Zero ? "0" : "symbolic"}};
        j["terms"] = json::array();
        for (const auto& [mono, coeff] : hamiltonian.terms())
            j["terms"].push_back({{"monomial", mono.to_string()}, {"coefficient", matrix_to_json(coeff)}});
        if (mode == OmegaMode::Symbolic) {
            const SpinOrbitDecomposition d = spin_orbit_decompose(hamiltonian, model);
            j["decomposition"] = {{"kinetic_ok", d.kinetic_ok},
                                  {"potential_ok", d.potential_ok},
                                  {"constant", d.constant.to_string()},
                                  {"c", to_string(d.c)},
                                  {"kappa", to_string(d.kappa)}};
        }
        out << j.dump() << "\n";
    } else {
        out << "H for spin " << to_string(spin) << " (E u = H u), "
            << (mode == OmegaMode::Zero ? "omega = 0" : "symbolic omega") << ":\n";
        for (const auto& [mono, coeff] : hamiltonian.terms()) {
            out << "  " << mono.to_string() << " :\n";
            std::istringstream lines(coeff.to_string());
            for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
        }
        if (mode == OmegaMode::Symbolic) {
            const SpinOrbitDecomposition d = spin_orbit_decompose(hamiltonian, model);
            out << "decomposition: kinetic_ok=" << (d.kinetic_ok ? "yes" : "no")
                << " potential_ok=" << (d.potential_ok ? "yes" : "no")
                << " constant=" << d.constant.to_string() << " c=" << to_string(d.c)
                << " kappa=" << to_string(d.kappa) << "\n";
        }
    }
    emit(out.str(), output_path);
    return kExitSuccess;
}

int run_spectrum(Spin spin, const std::string& emax_text, int lmax, int grid_points, double radius,
                 const std::string& format, const std::string& output_path) {
    const Rational e_max = parse_rational(emax_text);
    FdConfig cfg;
    cfg.box_radius = radius;
    cfg.grid_points = grid_points;
    const SpectrumComparison comparison = compare_spectra(spin, cfg, e_max, lmax);

    std::ostringstream out;
    if (format == "json") {
        json j{{"command", "spectrum"},
               {"spin", to_string(spin)},
               {"kappa", to_string(comparison.kappa)},
               {"max_abs_deviation", comparison.max_abs_deviation}};
        j["levels"] = json::array();
        for (const auto& row : comparison.rows)
            j["levels"].push_back({{"n_r", row.level.n_r},
                                   {"l", row.level.l},
                                   {"j", row.level.j.to_string()},
                                   {"E_analytic", to_string(row.level.energy)},
                                   {"E_numeric", row.numeric},
                                   {"deviation", row.deviation},
                                   {"degeneracy", row.level.degeneracy}});
        out << j.dump() << "\n";
    } else {
        out << "spin,n_r,l,j,E_analytic,E_numeric,deviation,degeneracy\n";
        for (const auto& row : comparison.rows)
            out << to_string(spin) << "," << row.level.n_r << "," << row.level.l << ","
                << row.level.j.to_string() << "," << to_string(row.level.energy) << ","
                << format_double(row.numeric) << "," << format_double(row.deviation) << ","
                << row.level.degeneracy << "\n";
    }
    emit(out.str(), output_path);
    return kExitSuccess;
}

int run_matrices(Spin spin, const std::string& name, const std::string& output_path) {
    const SpinModel model = build_model(spin);
    std::map<std::string, const SymMatrix*> fields{
        {"s1", &model.spin_matrices[0]}, {"s2", &model.spin_matrices[1]},
        {"s3", &model.spin_matrices[2]}, {"A", &model.A},
        {"B1", &model.B[0]},             {"B2", &model.B[1]},
        {"B3", &model.B[2]},             {"C", &model.C},
        {"A_adj", &model.A_adj},         {"C_adj", &model.C_adj},
        {"eta", &model.eta}};
    if (model.aux_matrices) {
        fields["aux1"] = &model.aux_matrices->at(0);
        fields["aux2"] = &model.aux_matrices->at(1);
        fields["aux3"] = &model.aux_matrices->at(2);
    }

    std::ostringstream out;
    if (name == "all") {
        json all;
        for (const auto& [key, matrix] : fields) all[key] = matrix_to_json(*matrix);
        out << json{{"command", "matrices"}, {"spin", to_string(spin)}, {"matrices", all}}.dump()
            << "\n";
    } else {
        auto it = fields.find(name);
        if (it == fields.end()) throw std::invalid_argument("unknown matrix name '" + name + "'");
        out << matrix_to_json(*it->second).dump() << "\n";
    }
    emit(out.str(), output_path);
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First-order wave equations for spin 1/2, 1 and 3/2: exact identity checks, "
                 "oscillator reduction and spectrum cross-validation"};
    app.require_subcommand(1);

    std::string spin_text;
    std::string output_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-s,--spin", spin_text, "particle spin: 1/2, 1 or 3/2")->required();
        cmd->add_option("-o,--output", output_path, "write output to a file instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "run all exact matrix identity checks");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "machine-readable report");
    add_common(verify);

    auto* reduce = app.add_subcommand(
        "reduce", "reduce the oscillator-coupled first-order system to a second-order Hamiltonian");
    bool reduce_json = false;
    std::string omega = "sym";
    reduce->add_flag("--json", reduce_json, "machine-readable report");
    reduce->add_option("--omega", omega, "oscillator frequency: 'sym' (symbolic) or '0'")
        ->check(CLI::IsMember({"sym", "0"}));
    add_common(reduce);

    auto* spectrum = app.add_subcommand(
        "spectrum", "enumerate the analytic spectrum and cross-check it numerically");
    std::string emax = "6";
    int lmax = 6;
    int grid_points = 4000;
    double radius = 12.0;
    std::string format = "csv";
    spectrum->add_option("--emax", emax, "energy cutoff in hbar*omega units (rational)");
    spectrum->add_option("--lmax", lmax, "maximum orbital quantum number")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--grid-n", grid_points, "interior grid points")
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--radius", radius, "box radius in oscillator lengths")
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_common(spectrum);

    auto* matrices = app.add_subcommand("matrices", "export model matrices as JSON");
    std::string name = "all";
    matrices->add_option("--name", name,
                         "matrix to export (s1..s3, aux1..aux3, A, B1..B3, C, A_adj, C_adj, eta "
                         "or 'all')");
    add_common(matrices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        const Spin spin = parse_spin(spin_text);
        if (verify->parsed()) return run_verify(spin, verify_json, output_path);
        if (reduce->parsed()) return run_reduce(spin, omega, reduce_json, output_path);
        if (spectrum->parsed())
            return run_spectrum(spin, emax, lmax, grid_points, radius, format, output_path);
        if (matrices->parsed()) return run_matrices(spin, name, output_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
