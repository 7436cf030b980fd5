// scan.hpp — Parameter scans over g or delta with per-method eigenvalue
// tables, error metrics against the exact spectrum, and CSV/JSON emission.

#pragma once

#include "qrm/model.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qrm {

enum class ScanAxis { g, delta };

inline std::string to_string(ScanAxis a) { return a == ScanAxis::g ? "g" : "delta"; }

struct ScanRequest {
    ScanAxis axis{ScanAxis::g};
    std::vector<double> grid;       // strictly increasing
    ModelParams fixed;              // template; axis value substituted per point
    std::vector<Method> methods;
    int levels{12};
    double exact_tol{1e-10};
    int jobs{1};

    void validate() const;
};

struct LevelEntry {
    double energy;
    std::string label;  // parity for EXACT, pair/branch (e.g. "2+") for AA/GAA
};

struct MethodMetrics {
    double max_abs{0.0};
    double rms{0.0};
};

struct SpectrumScan {
    ScanRequest request;
    // table[method_index][grid_index][level_index], method order as requested.
    std::vector<std::vector<std::vector<LevelEntry>>> table;
    std::map<Method, MethodMetrics> metrics;  // vs EXACT, when EXACT is present
};

// Lowest `levels` energies of one method at one parameter point, ascending.
std::vector<LevelEntry> method_levels(Method method, const ModelParams& params, int levels,
                                      double exact_tol);

SpectrumScan run_scan(const ScanRequest& request);

// Long-format CSV: axis_value,method,level_index,energy,label with 17
// significant digits; byte-identical across runs.
void write_csv(const SpectrumScan& scan, std::ostream& out);

// JSON document mirroring SpectrumScan.
std::string to_json(const SpectrumScan& scan);

// Uniform inclusive grid with `steps` points (steps == 1 yields {a}).
std::vector<double> make_grid(double a, double b, int steps);

// Runs fn(i) for i in [0, count) on `jobs` threads; fn must be pure per index.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace qrm
