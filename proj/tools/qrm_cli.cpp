// qrm — command-line spectrum scans, Juddian-point reports and figure data
// for the quantum Rabi model.

#include "qrm/crossings.hpp"
#include "qrm/exact.hpp"
#include "qrm/figures.hpp"
#include "qrm/scan.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "a:b:steps" with inclusive endpoints; steps is the point count.
std::vector<double> parse_range(const std::string& spec) {
    double a = 0.0, b = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1)
        throw CLI::ValidationError("--range", "expected a:b:steps with steps >= 1");
    return qrm::make_grid(a, b, steps);
}

std::vector<qrm::Method> parse_methods(const std::string& csv) {
    std::vector<qrm::Method> methods;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) methods.push_back(qrm::method_from_string(token));
    return methods;
}

int effective_jobs(int jobs_flag) {
    if (const char* env = std::getenv("QRM_JOBS")) {
        const int env_jobs = std::atoi(env);
        if (env_jobs >= 1) return env_jobs;
    }
    return jobs_flag;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

struct CrossingRow {
    qrm::JuddianPoint point;
    double exact_gap;  // < 0 when not refined
};

std::vector<CrossingRow> collect_crossings(int n_max, double delta, double omega,
                                           bool refine_exact) {
    std::vector<CrossingRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& point : qrm::find_crossings(n, delta, omega)) {
            double gap = -1.0;
            if (refine_exact) {
                const qrm::ModelParams params{delta, omega, point.g_star};
                const auto exact = qrm::exact_spectrum(params, 2 * n + 2, 1e-10);
                gap = exact.energies[2 * n + 1].first - exact.energies[2 * n].first;
            }
            rows.push_back({point, gap});
        }
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Rabi model spectra: exact diagonalization, AA/GAA/GRWA "
                 "approximations, Juddian crossing points and figure datasets"};
    app.require_subcommand(1);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Scan the spectrum over g or delta");
    std::string axis_name = "g", range_spec, methods_csv = "EXACT,AA,GAA_K", out_path;
    double delta = 0.0, omega = 1.0, g = 0.0, tol = 1e-10;
    int levels = 12, jobs = 1;
    bool as_json = false;
    spectrum->add_option("--axis", axis_name, "Scan axis: g or delta")
        ->check(CLI::IsMember({"g", "delta"}))
        ->capture_default_str();
    spectrum->add_option("--range", range_spec, "Grid a:b:steps over the scan axis")
        ->required();
    spectrum->add_option("--delta", delta, "Qubit splitting (fixed value when axis=g)")
        ->capture_default_str();
    spectrum->add_option("--omega", omega, "Oscillator frequency")->capture_default_str();
    spectrum->add_option("--g", g, "Coupling (fixed value when axis=delta)")
        ->capture_default_str();
    spectrum->add_option("--levels", levels, "Number of energy levels per point")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
    spectrum->add_option("--methods", methods_csv,
                         "Comma list of EXACT,AA,GAA_K,GAA_L,GRWA,GRWA_GAA")
        ->capture_default_str();
    spectrum->add_option("--tol", tol, "Exact-diagonalization convergence tolerance")
        ->capture_default_str();
    spectrum->add_option("--out", out_path, "Output file (default stdout)");
    spectrum->add_flag("--json", as_json, "Emit JSON instead of CSV");
    spectrum->add_option("--jobs", jobs, "Worker threads (QRM_JOBS overrides)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // crossings
    auto* crossings = app.add_subcommand("crossings", "Report Juddian crossing points");
    int n_max = 5;
    double cr_delta = 1.2, cr_omega = 1.0;
    bool refine_exact = false, cr_json = false;
    std::string cr_out;
    crossings->add_option("--nmax", n_max, "Largest pair index")
        ->check(CLI::Range(0, 10))
        ->capture_default_str();
    crossings->add_option("--delta", cr_delta, "Qubit splitting")->capture_default_str();
    crossings->add_option("--omega", cr_omega, "Oscillator frequency")->capture_default_str();
    crossings->add_flag("--refine-exact", refine_exact,
                        "Also report the exact-diagonalization gap at each root");
    crossings->add_option("--out", cr_out, "Output file (default stdout)");
    crossings->add_flag("--json", cr_json, "Emit JSON instead of CSV");

    // figure
    auto* figure = app.add_subcommand("figure", "Emit the dataset behind one figure");
    std::string figure_id, fig_out = "figure.csv";
    int fig_levels = 0, fig_jobs = 1;
    figure->add_option("--id", figure_id, "Figure id: 2a 2b 2c 3a 3b 3c 4")
        ->check(CLI::IsMember(qrm::figure_ids()))
        ->required();
    figure->add_option("--out", fig_out, "Output CSV path")->capture_default_str();
    figure->add_option("--levels", fig_levels,
                       "Levels per point (0 = figure default: 12, or 24 for 3c)")
        ->capture_default_str();
    figure->add_option("--jobs", fig_jobs, "Worker threads (QRM_JOBS overrides)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) {
            qrm::ScanRequest req;
            req.axis = (axis_name == "g") ? qrm::ScanAxis::g : qrm::ScanAxis::delta;
            req.grid = parse_range(range_spec);
            req.fixed = qrm::ModelParams{delta, omega, g};
            req.methods = parse_methods(methods_csv);
            req.levels = levels;
            req.exact_tol = tol;
            req.jobs = effective_jobs(jobs);
            const qrm::SpectrumScan scan = qrm::run_scan(req);
            if (as_json) {
                write_output(out_path, qrm::to_json(scan) + "\n");
            } else {
                std::ostringstream csv;
                qrm::write_csv(scan, csv);
                write_output(out_path, csv.str());
            }
        } else if (crossings->parsed()) {
            const auto rows = collect_crossings(n_max, cr_delta, cr_omega, refine_exact);
            if (cr_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& row : rows) {
                    nlohmann::json entry = {{"n", row.point.n},
                                            {"g_star", row.point.g_star},
                                            {"delta", row.point.delta},
                                            {"energy", row.point.energy},
                                            {"residual", row.point.residual}};
                    if (refine_exact) entry["exact_gap"] = row.exact_gap;
                    j.push_back(std::move(entry));
                }
                write_output(cr_out, j.dump(2) + "\n");
            } else {
                std::ostringstream csv;
                csv << "n,g_star,energy,residual" << (refine_exact ? ",exact_gap" : "")
                    << "\n";
                for (const auto& row : rows) {
                    csv << row.point.n << ',' << fmt17(row.point.g_star) << ','
                        << fmt17(row.point.energy) << ',' << fmt17(row.point.residual);
                    if (refine_exact) csv << ',' << fmt17(row.exact_gap);
                    csv << '\n';
                }
                write_output(cr_out, csv.str());
            }
        } else if (figure->parsed()) {
            qrm::emit_figure_data(figure_id, fig_out, fig_levels, effective_jobs(fig_jobs));
        }
    } catch (const std::exception& e) {
        std::cerr << "qrm: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
