// Acceptance suite: one pass/fail line per criterion. An optional first
// argument names the CLI binary, used by the figure-regeneration criterion.

#include "qrm/approx.hpp"
#include "qrm/crossings.hpp"
#include "qrm/exact.hpp"
#include "qrm/oscillator.hpp"
#include "qrm/poly.hpp"
#include "qrm/scan.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

using namespace qrm;
using testutil::close_mixed;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: Juddian roots of pair n=2 at delta=1.2 -------------------

std::vector<JuddianPoint> criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const auto roots = find_crossings(2, 1.2, 1.0);
    const double elapsed = seconds_since(start);
    const bool ok = roots.size() == 2 && std::abs(roots[0].g_star - 0.3074) < 5e-4 &&
                    std::abs(roots[1].g_star - 0.8778) < 5e-4 && elapsed < 1.0;
    std::ostringstream msg;
    msg << "Juddian roots n=2, delta=1.2 -> {";
    for (const auto& r : roots) msg << " " << r.g_star;
    msg << " } in " << elapsed << " s";
    report(1, ok, msg.str());
    return roots;
}

void criterion_2(const std::vector<JuddianPoint>& roots) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = roots.size() == 2;
    double worst_gap = 0.0;
    for (const auto& root : roots) {
        const auto spec = exact_spectrum(ModelParams{1.2, 1.0, root.g_star}, 8, 1e-10);
        const auto& lo = spec.energies[4];
        const auto& hi = spec.energies[5];
        const double gap = hi.first - lo.first;
        worst_gap = std::max(worst_gap, gap);
        ok = ok && gap < 1e-6 && lo.second != hi.second &&
             std::abs(lo.first - (2.0 - root.g_star * root.g_star)) < 1e-5;
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 10.0;
    std::ostringstream msg;
    msg << "exact opposite-parity degeneracy at each root, worst gap " << worst_gap
        << ", " << elapsed << " s";
    report(2, ok, msg.str());
}

// --- criterion 3: polynomial identity suite --------------------------------

void criterion_3() {
    bool ok = true;
    for (int n = 0; n <= 10 && ok; ++n) {
        for (int i = 0; i <= 30 && ok; ++i) {
            const double g = 0.1 * i;
            ok = close_mixed(normalized_constraint(n, ModelParams{0.0, 1.0, g}),
                             laguerre(n, 0, 4.0 * g * g), 1e-10);
        }
        for (int i = 0; i <= 16 && ok; ++i) {
            const double delta = 0.5 * i;
            ok = close_mixed(constraint_poly(n, n, ModelParams{delta, 1.0, 0.0}),
                             constraint_at_zero_coupling(n, delta), 1e-9);
        }
    }
    // Printed table rows n = 0..3.
    for (double g : {0.0, 0.3, 0.8778, 1.5}) {
        for (double delta : {0.0, 0.7, 1.2, 2.5}) {
            const double g2 = g * g, d2 = delta * delta;
            const double rows[] = {
                1.0,
                1.0 - 4.0 * g2 - d2 / 4.0,
                1.0 - 8.0 * g2 + 8.0 * g2 * g2 - 5.0 * d2 / 16.0 + 3.0 * d2 * g2 / 4.0 +
                    d2 * d2 / 64.0,
                1.0 - 12.0 * g2 + 24.0 * g2 * g2 - 32.0 * g2 * g2 * g2 / 3.0 -
                    49.0 * d2 / 144.0 + 29.0 * g2 * d2 / 18.0 - 11.0 * g2 * g2 * d2 / 9.0 +
                    7.0 * d2 * d2 / 288.0 - g2 * d2 * d2 / 24.0 -
                    d2 * d2 * d2 / 2304.0,
            };
            for (int n = 0; n <= 3; ++n) {
                ok = ok && close_mixed(normalized_constraint(n, ModelParams{delta, 1.0, g}),
                                       rows[n], 1e-12);
            }
        }
    }
    report(3, ok, "K_n(g,0)=L_n(4g^2), zero-coupling product, printed table rows n=0..3");
}

void criterion_4() {
    bool ok = true;
    int checked = 0;
    for (int n = 0; n <= 6; ++n) {
        for (double delta : {0.5, 1.2, 2.5, 3.3, 4.7}) {
            const auto [expected, found] = crossing_count_certificate(n, delta, 1.0);
            ok = ok && expected == found;
            ++checked;
        }
    }
    report(4, ok, "crossing-count law on " + std::to_string(checked) + " (n, delta) cells");
}

void criterion_5() {
    bool ok = true;
    for (double delta : {0.6, 1.2, 2.7}) {
        const auto spec = exact_spectrum(ModelParams{delta, 1.0, 0.0}, 10, 1e-12);
        std::vector<double> expected;
        for (int n = 0; n < 7; ++n) {
            expected.push_back(n - delta / 2.0);
            expected.push_back(n + delta / 2.0);
        }
        std::sort(expected.begin(), expected.end());
        for (int i = 0; i < 10; ++i)
            ok = ok && std::abs(spec.energies[i].first - expected[i]) < 1e-10;
    }
    for (double g : {0.5, 1.0, 1.5, 2.0}) {
        const auto spec = exact_spectrum(ModelParams{0.0, 1.0, g}, 10, 1e-9);
        for (int n = 0; n < 5; ++n) {
            ok = ok && std::abs(spec.energies[2 * n].first - (n - g * g)) < 1e-8;
            ok = ok && std::abs(spec.energies[2 * n + 1].first - (n - g * g)) < 1e-8;
        }
    }
    report(5, ok, "decoupled ladder at g=0 (1e-10) and degenerate ladder at delta=0 (1e-8)");
}

void criterion_6() {
    // GAA-K dominance over the AA for delta = 2 on pairs 1..5.
    double max_aa = 0.0, max_gaa = 0.0;
    for (double g : make_grid(0.0, 2.0, 201)) {
        const ModelParams p{2.0, 1.0, g};
        const auto exact = exact_spectrum(p, 12, 1e-10);
        for (int n = 1; n <= 5; ++n) {
            const auto aa = aa_pair(n, p);
            const auto gaa = gaa_pair(n, p, GaaVariant::K);
            const double lo = exact.energies[2 * n].first;
            const double hi = exact.energies[2 * n + 1].first;
            max_aa = std::max({max_aa, std::abs(aa.e_minus - lo), std::abs(aa.e_plus - hi)});
            max_gaa =
                std::max({max_gaa, std::abs(gaa.e_minus - lo), std::abs(gaa.e_plus - hi)});
        }
    }
    bool ok = max_gaa < max_aa;

    // AA shows an unphysical inter-pair crossing for delta = 1.2 before
    // g/omega = 0.5; GAA-K does not.
    bool aa_crosses = false, gaa_crosses = false;
    for (int n = 0; n <= 4; ++n) {
        auto gap = [n](const ModelParams& p, bool use_gaa) {
            const double omega_lo =
                use_gaa ? gaa_tunneling(n, p, GaaVariant::K) : aa_tunneling(n, p);
            const double omega_hi =
                use_gaa ? gaa_tunneling(n + 1, p, GaaVariant::K) : aa_tunneling(n + 1, p);
            return (displaced_energy(n + 1, p) - omega_hi) -
                   (displaced_energy(n, p) + omega_lo);
        };
        const auto grid = make_grid(1e-3, 0.5, 501);
        for (bool use_gaa : {false, true}) {
            double prev = gap(ModelParams{1.2, 1.0, grid[0]}, use_gaa);
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const double cur = gap(ModelParams{1.2, 1.0, grid[i]}, use_gaa);
                if ((prev < 0.0) != (cur < 0.0)) (use_gaa ? gaa_crosses : aa_crosses) = true;
                prev = cur;
            }
        }
    }
    ok = ok && aa_crosses && !gaa_crosses;
    std::ostringstream msg;
    msg << "delta=2 pairs 1..5: max|AA-exact|=" << max_aa << " vs max|GAA-exact|=" << max_gaa
        << "; AA unphysical crossing=" << aa_crosses << ", GAA=" << gaa_crosses;
    report(6, ok, msg.str());
}

void criterion_7() {
    double max_diff = 0.0;
    for (double g : make_grid(0.0, 2.0, 201)) {
        const ModelParams p{0.7, 1.0, g};
        const auto k = gaa_pair(5, p, GaaVariant::K);
        const auto l = gaa_pair(5, p, GaaVariant::L);
        max_diff = std::max({max_diff, std::abs(k.e_minus - l.e_minus),
                             std::abs(k.e_plus - l.e_plus)});
    }
    // Closed-form floor at g = 0: both variants share the exponential factor,
    // so the branch difference is (delta/2) e^{-f/2} |prod_k (1 - delta^2/4k^2)
    // - L_5(f)| with f = delta^2 / (4 (5!)^{1/5}).  That evaluates to 0.0180,
    // so the variants agree to 0.02 over the grid but no tighter.
    const double f = 0.49 / (4.0 * std::exp(std::lgamma(6.0) / 5.0));
    double k_at_0 = 1.0;
    for (int k = 1; k <= 5; ++k) k_at_0 *= 1.0 - 0.49 / (4.0 * k * k);
    const double floor_at_0 =
        0.35 * std::exp(-0.5 * f) * std::abs(k_at_0 - laguerre(5, 0, f));
    bool ok = max_diff < 0.02 && std::abs(max_diff - floor_at_0) < 1e-12;

    // GAA-L keeps a small but nonzero gap at every GAA-K crossing; the
    // deviation is largest at the smallest-g root (0.118 for n=5, delta=1.2)
    // and stays below 0.05 at all later roots.
    bool gaps_ok = true;
    double max_gap = 0.0;
    const auto roots = find_crossings(5, 1.2, 1.0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double gap = 2.0 * std::abs(gaa_tunneling(
                                     5, ModelParams{1.2, 1.0, roots[i].g_star},
                                     GaaVariant::L));
        max_gap = std::max(max_gap, gap);
        gaps_ok = gaps_ok && gap > 1e-8 && gap < (i == 0 ? 0.15 : 0.05);
    }
    ok = ok && gaps_ok;
    std::ostringstream msg;
    msg << "GAA-K vs GAA-L on pair 5: max diff " << max_diff << " (delta=0.7, g=0 floor "
        << floor_at_0 << "); GAA-L gaps at GAA-K roots nonzero, max " << max_gap
        << " (delta=1.2): " << gaps_ok;
    report(7, ok, msg.str());
}

void criterion_8() {
    bool ok = true;
    double worst = 0.0;
    for (double delta : {0.5, 1.0, 2.0}) {
        for (double g : {0.25, 0.5, 1.0}) {
            const ModelParams p{delta, 1.0, g};
            const auto impl = grwa_spectrum(p, 24, GrwaBasis::AA);
            const auto oracle = oracles::grwa_truncated_spectrum(p, 25, 200);
            for (int i = 0; i < 10; ++i) {
                worst = std::max(worst, std::abs(impl[i] - oracle[i]));
                ok = ok && std::abs(impl[i] - oracle[i]) < 1e-10;
            }
        }
    }
    std::ostringstream msg;
    msg << "GRWA vs AA-basis truncation oracle, 9 parameter sets, worst |diff| " << worst;
    report(8, ok, msg.str());
}

void criterion_9(const char* cli_path) {
    if (cli_path == nullptr) {
        report(9, false, "figure regeneration skipped: CLI binary path not supplied");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qrm_acceptance_figs";
    fs::create_directories(dir);
    const std::vector<std::string> ids{"2a", "2b", "2c", "3a", "3b", "3c", "4"};

    auto emit_all = [&](const std::string& suffix) -> bool {
        for (const auto& id : ids) {
            const fs::path out = dir / ("fig" + id + suffix + ".csv");
            const std::string cmd = std::string("\"") + cli_path + "\" figure --id " + id +
                                    " --out \"" + out.string() + "\"";
            if (std::system(cmd.c_str()) != 0) return false;
        }
        return true;
    };

    const auto start = std::chrono::steady_clock::now();
    bool ok = emit_all("_a");
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 60.0 && emit_all("_b");

    bool stable = true;
    for (const auto& id : ids) {
        std::ifstream a(dir / ("fig" + id + "_a.csv")), b(dir / ("fig" + id + "_b.csv"));
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        stable = stable && a.good() && b.good() && sa.str() == sb.str() &&
                 !sa.str().empty();
    }
    ok = ok && stable;
    std::ostringstream msg;
    msg << "all 7 figure datasets in " << elapsed << " s, byte-stable across runs: "
        << stable;
    report(9, ok, msg.str());
    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    const auto roots = criterion_1();
    criterion_2(roots);
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(argc > 1 ? argv[1] : nullptr);
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
