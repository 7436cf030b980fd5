#include "qrm/approx.hpp"

#include "qrm/oscillator.hpp"
#include "qrm/poly.hpp"

#include <algorithm>
#include <cmath>

namespace qrm {

namespace {

PairSpectrum make_pair(Method method, int n, double base, double omega_n) {
    const double half_gap = std::abs(omega_n);
    return PairSpectrum{method, n, base - half_gap, base + half_gap};
}

}  // namespace

double aa_tunneling(int n, const ModelParams& params) {
    if (n < 0) throw std::invalid_argument("aa_tunneling: n must be >= 0");
    params.validate();
    const double gr2 = params.g_ratio() * params.g_ratio();
    return 0.5 * params.delta * std::exp(-2.0 * gr2) * laguerre(n, 0, 4.0 * gr2);
}

PairSpectrum aa_pair(int n, const ModelParams& params) {
    return make_pair(Method::AA, n, displaced_energy(n, params), aa_tunneling(n, params));
}

double gaa_tunneling(int n, const ModelParams& params, GaaVariant variant) {
    if (n < 0) throw std::invalid_argument("gaa_tunneling: n must be >= 0");
    params.validate();
    const double x = corrected_displacement_sq(n, params);  // 4 alpha_n^2
    const double poly = (variant == GaaVariant::K) ? normalized_constraint(n, params)
                                                   : laguerre(n, 0, x);
    return 0.5 * params.delta * std::exp(-0.5 * x) * poly;
}

PairSpectrum gaa_pair(int n, const ModelParams& params, GaaVariant variant) {
    const Method m = (variant == GaaVariant::K) ? Method::GAA_K : Method::GAA_L;
    return make_pair(m, n, displaced_energy(n, params), gaa_tunneling(n, params, variant));
}

std::vector<double> grwa_spectrum(const ModelParams& params, int n_max, GrwaBasis basis) {
    if (n_max < 1) throw std::invalid_argument("grwa_spectrum: n_max must be >= 1");
    params.validate();

    const bool gaa = (basis == GrwaBasis::GAA);
    // Signed tunneling: the blocks couple the physical states Psi_{n,+} and
    // Psi_{n+1,-}, whose energies carry the sign of Omega_n.
    auto tunneling = [&](int n) {
        return gaa ? gaa_tunneling(n, params, GaaVariant::K) : aa_tunneling(n, params);
    };
    // Overlap <n_-|(n+1)_+>; in the GAA basis the corrected displacement of
    // the upper pair index is used.
    auto block_overlap = [&](int n) {
        const double alpha = gaa ? 0.5 * std::sqrt(corrected_displacement_sq(n + 1, params))
                                 : params.g_ratio();
        return coherent_overlap(n, n + 1, alpha);
    };

    std::vector<double> energies;
    energies.reserve(1 + 2 * n_max);
    // Isolated ground state Psi_{0,-}.
    energies.push_back(displaced_energy(0, params) - tunneling(0));

    for (int n = 0; n < n_max; ++n) {
        const double a = displaced_energy(n, params) + tunneling(n);
        const double b = displaced_energy(n + 1, params) - tunneling(n + 1);
        const double c = 0.5 * params.delta * block_overlap(n);
        const double mid = 0.5 * (a + b);
        const double rad = std::hypot(0.5 * (a - b), c);
        energies.push_back(mid - rad);
        energies.push_back(mid + rad);
    }
    std::sort(energies.begin(), energies.end());
    return energies;
}

}  // namespace qrm
