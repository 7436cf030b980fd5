#include "qrm/figures.hpp"

#include "qrm/approx.hpp"
#include "qrm/exact.hpp"
#include "qrm/scan.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qrm {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_figure_data: cannot open " + path);
    return out;
}

void emit_scan(const ScanRequest& request, const std::string& path) {
    const SpectrumScan scan = run_scan(request);
    auto out = open_out(path);
    write_csv(scan, out);
    if (!out) throw std::runtime_error("emit_figure_data: write failed for " + path);
}

// Figure 4: level pair n = 5 under EXACT/AA/GAA_K/GAA_L for several delta
// values; label column carries "<delta>:<pair><branch>".
void emit_pair_comparison(const std::string& path, int jobs) {
    constexpr int kPair = 5;
    const std::vector<double> deltas{0.7, 1.2, 2.0, 3.0};
    const std::vector<double> grid = make_grid(0.0, 2.0, 201);
    const std::vector<Method> methods{Method::EXACT, Method::AA, Method::GAA_K,
                                      Method::GAA_L};

    // energies[di][gi][mi][branch]
    std::vector<std::vector<std::array<std::array<double, 2>, 4>>> energies(
        deltas.size(),
        std::vector<std::array<std::array<double, 2>, 4>>(grid.size()));
    const int total = static_cast<int>(deltas.size() * grid.size());
    parallel_for(total, jobs, [&](int idx) {
        const int di = idx / static_cast<int>(grid.size());
        const int gi = idx % static_cast<int>(grid.size());
        const ModelParams params{deltas[di], 1.0, grid[gi]};
        const ExactSpectrum exact = exact_spectrum(params, 2 * kPair + 2, 1e-10);
        energies[di][gi][0] = {exact.energies[2 * kPair].first,
                               exact.energies[2 * kPair + 1].first};
        const PairSpectrum aa = aa_pair(kPair, params);
        energies[di][gi][1] = {aa.e_minus, aa.e_plus};
        const PairSpectrum gk = gaa_pair(kPair, params, GaaVariant::K);
        energies[di][gi][2] = {gk.e_minus, gk.e_plus};
        const PairSpectrum gl = gaa_pair(kPair, params, GaaVariant::L);
        energies[di][gi][3] = {gl.e_minus, gl.e_plus};
    });

    auto out = open_out(path);
    out << "axis_value,method,level_index,energy,label\n";
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
            for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                for (int branch = 0; branch < 2; ++branch) {
                    out << fmt17(grid[gi]) << ',' << to_string(methods[mi]) << ',' << branch
                        << ',' << fmt17(energies[di][gi][mi][branch]) << ','
                        << fmt17(deltas[di]) << ':' << kPair << (branch ? '+' : '-') << '\n';
                }
            }
        }
    }
    if (!out) throw std::runtime_error("emit_figure_data: write failed for " + path);
}

}  // namespace

void emit_figure_data(const std::string& figure_id, const std::string& out_path, int levels,
                      int jobs) {
    const std::vector<Method> methods{Method::EXACT, Method::AA, Method::GAA_K};
    ScanRequest req;
    req.methods = methods;
    req.jobs = jobs;

    if (figure_id == "2a" || figure_id == "2b" || figure_id == "2c") {
        req.axis = ScanAxis::g;
        req.grid = make_grid(0.0, 3.0, 301);
        req.fixed = ModelParams{figure_id == "2a" ? 0.7 : figure_id == "2b" ? 1.2 : 2.0,
                                1.0, 0.0};
        req.levels = levels > 0 ? levels : 12;
        emit_scan(req, out_path);
    } else if (figure_id == "3a" || figure_id == "3b" || figure_id == "3c") {
        req.axis = ScanAxis::delta;
        req.grid = make_grid(0.0, figure_id == "3c" ? 8.0 : 6.0, 241);
        req.fixed = ModelParams{0.0, 1.0, figure_id == "3a" ? 0.0 : 0.5};
        req.levels = levels > 0 ? levels : (figure_id == "3c" ? 18 : 12);
        emit_scan(req, out_path);
    } else if (figure_id == "4") {
        emit_pair_comparison(out_path, jobs);
    } else {
        throw std::invalid_argument("emit_figure_data: unknown figure id " + figure_id);
    }
}

}  // namespace qrm
