// approx.hpp — Level-pair spectra under the adiabatic approximation (AA), the
// generalized adiabatic approximation (GAA-K / GAA-L) and the generalized
// rotating-wave approximation (GRWA).

#pragma once

#include "qrm/model.hpp"

#include <vector>

namespace qrm {

enum class GaaVariant { K, L };
enum class GrwaBasis { AA, GAA };

struct PairSpectrum {
    Method method;
    int n;            // pair index
    double e_minus;   // lower level of the pair
    double e_plus;    // upper level of the pair
};

// AA tunneling strength (delta/2) exp(-2 g^2/omega^2) L_n(4 g^2/omega^2).
double aa_tunneling(int n, const ModelParams& params);

// Pair energies n*omega - g^2/omega -/+ |Omega_n^AA|, ordered.
PairSpectrum aa_pair(int n, const ModelParams& params);

// GAA tunneling strength: variant K uses (delta/2) exp(-2 alpha_n^2) K_n(g, delta),
// variant L uses (delta/2) exp(-2 alpha_n^2) L_n(4 alpha_n^2).
double gaa_tunneling(int n, const ModelParams& params, GaaVariant variant);

PairSpectrum gaa_pair(int n, const ModelParams& params, GaaVariant variant);

// GRWA ladder: one isolated ground energy -g^2/omega - Omega_0 and, for each
// n in [0, n_max), the eigenvalues of the 2x2 block coupling the AA states
// Psi_{n,+} and Psi_{n+1,-} with off-diagonal (delta/2) <n_-|(n+1)_+>.
// Basis GAA substitutes GAA-K diagonal energies and corrected displacements.
// Returns 1 + 2*n_max energies, sorted ascending.
std::vector<double> grwa_spectrum(const ModelParams& params, int n_max, GrwaBasis basis);

}  // namespace qrm
