#include "qrm/scan.hpp"

#include "qrm/approx.hpp"
#include "qrm/exact.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace qrm {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<LevelEntry> pair_method_levels(Method method, const ModelParams& params,
                                           int levels) {
    std::vector<LevelEntry> entries;
    entries.reserve(2 * (levels + 1));
    for (int n = 0; n <= levels; ++n) {
        PairSpectrum p{};
        switch (method) {
            case Method::AA: p = aa_pair(n, params); break;
            case Method::GAA_K: p = gaa_pair(n, params, GaaVariant::K); break;
            case Method::GAA_L: p = gaa_pair(n, params, GaaVariant::L); break;
            default: throw std::logic_error("pair_method_levels: not a pair method");
        }
        entries.push_back({p.e_minus, std::to_string(n) + "-"});
        entries.push_back({p.e_plus, std::to_string(n) + "+"});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const LevelEntry& a, const LevelEntry& b) { return a.energy < b.energy; });
    entries.resize(levels);
    return entries;
}

}  // namespace

void ScanRequest::validate() const {
    fixed.validate();
    if (grid.empty()) throw std::invalid_argument("ScanRequest: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("ScanRequest: grid must be strictly increasing");
    if (methods.empty()) throw std::invalid_argument("ScanRequest: methods must be non-empty");
    if (levels < 1 || levels > 40)
        throw std::invalid_argument("ScanRequest: levels must be in [1, 40]");
    if (!(exact_tol > 0.0)) throw std::invalid_argument("ScanRequest: exact_tol must be > 0");
    if (jobs < 1) throw std::invalid_argument("ScanRequest: jobs must be >= 1");
}

std::vector<LevelEntry> method_levels(Method method, const ModelParams& params, int levels,
                                      double exact_tol) {
    switch (method) {
        case Method::EXACT: {
            const ExactSpectrum spec = exact_spectrum(params, levels, exact_tol);
            std::vector<LevelEntry> entries;
            entries.reserve(levels);
            for (const auto& [e, parity] : spec.energies)
                entries.push_back({e, to_string(parity)});
            return entries;
        }
        case Method::AA:
        case Method::GAA_K:
        case Method::GAA_L:
            return pair_method_levels(method, params, levels);
        case Method::GRWA:
        case Method::GRWA_GAA: {
            const GrwaBasis basis =
                (method == Method::GRWA) ? GrwaBasis::AA : GrwaBasis::GAA;
            const auto energies = grwa_spectrum(params, levels + 2, basis);
            std::vector<LevelEntry> entries;
            for (int i = 0; i < levels; ++i) entries.push_back({energies[i], "-"});
            return entries;
        }
    }
    throw std::logic_error("method_levels: unknown method");
}

std::vector<double> make_grid(double a, double b, int steps) {
    if (steps < 1) throw std::invalid_argument("make_grid: steps must be >= 1");
    if (steps == 1) return {a};
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i) grid[i] = a + (b - a) * i / (steps - 1);
    return grid;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

SpectrumScan run_scan(const ScanRequest& request) {
    request.validate();
    const int n_points = static_cast<int>(request.grid.size());
    const int n_methods = static_cast<int>(request.methods.size());

    SpectrumScan scan{request, {}, {}};
    scan.table.assign(n_methods, std::vector<std::vector<LevelEntry>>(n_points));

    parallel_for(n_points, request.jobs, [&](int gi) {
        ModelParams params = request.fixed;
        (request.axis == ScanAxis::g ? params.g : params.delta) = request.grid[gi];
        for (int mi = 0; mi < n_methods; ++mi) {
            try {
                scan.table[mi][gi] = method_levels(request.methods[mi], params,
                                                   request.levels, request.exact_tol);
            } catch (const std::exception& e) {
                throw std::runtime_error("scan point " + to_string(request.axis) + "=" +
                                         fmt17(request.grid[gi]) + " (" +
                                         to_string(request.methods[mi]) + "): " + e.what());
            }
        }
    });

    // Error metrics against EXACT, over all grid points and level indices.
    const auto exact_it =
        std::find(request.methods.begin(), request.methods.end(), Method::EXACT);
    if (exact_it != request.methods.end()) {
        const int ei = static_cast<int>(exact_it - request.methods.begin());
        for (int mi = 0; mi < n_methods; ++mi) {
            MethodMetrics metrics;
            double sq_sum = 0.0;
            long count = 0;
            for (int gi = 0; gi < n_points; ++gi) {
                for (int li = 0; li < request.levels; ++li) {
                    const double d =
                        scan.table[mi][gi][li].energy - scan.table[ei][gi][li].energy;
                    metrics.max_abs = std::max(metrics.max_abs, std::abs(d));
                    sq_sum += d * d;
                    ++count;
                }
            }
            metrics.rms = count ? std::sqrt(sq_sum / count) : 0.0;
            scan.metrics[request.methods[mi]] = metrics;
        }
    }
    return scan;
}

void write_csv(const SpectrumScan& scan, std::ostream& out) {
    out << "axis_value,method,level_index,energy,label\n";
    const auto& req = scan.request;
    for (std::size_t gi = 0; gi < req.grid.size(); ++gi) {
        for (std::size_t mi = 0; mi < req.methods.size(); ++mi) {
            const auto& row = scan.table[mi][gi];
            for (std::size_t li = 0; li < row.size(); ++li) {
                out << fmt17(req.grid[gi]) << ',' << to_string(req.methods[mi]) << ','
                    << li << ',' << fmt17(row[li].energy) << ',' << row[li].label << '\n';
            }
        }
    }
}

std::string to_json(const SpectrumScan& scan) {
    nlohmann::json j;
    const auto& req = scan.request;
    j["axis"] = to_string(req.axis);
    j["grid"] = req.grid;
    j["fixed"] = {{"delta", req.fixed.delta}, {"omega", req.fixed.omega}, {"g", req.fixed.g}};
    j["levels"] = req.levels;
    std::vector<std::string> method_names;
    for (Method m : req.methods) method_names.push_back(to_string(m));
    j["methods"] = method_names;
    nlohmann::json table = nlohmann::json::object();
    for (std::size_t mi = 0; mi < req.methods.size(); ++mi) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : scan.table[mi]) {
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& entry : row)
                entries.push_back({{"energy", entry.energy}, {"label", entry.label}});
            rows.push_back(std::move(entries));
        }
        table[to_string(req.methods[mi])] = std::move(rows);
    }
    j["table"] = std::move(table);
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [method, m] : scan.metrics)
        metrics[to_string(method)] = {{"max_abs", m.max_abs}, {"rms", m.rms}};
    j["metrics"] = std::move(metrics);
    return j.dump(2);
}

}  // namespace qrm
