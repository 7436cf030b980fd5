// oscillator.hpp — Displaced-oscillator energies and generalized coherent
// state overlaps.

#pragma once

#include "qrm/model.hpp"

namespace qrm {

enum class Branch { plus, minus };

struct DisplacedLevel {
    int n;
    Branch branch;
    double energy;  // n*omega - g^2/omega, branch independent
};

// Energy of the displaced-oscillator level n: n*omega - g^2/omega.
double displaced_energy(int n, const ModelParams& params);

// Overlap <m_-|n_+> of Fock states displaced by -alpha and +alpha:
//   exp(-2 alpha^2) |2 alpha|^{n-m} sqrt(m!/n!) L_m^{n-m}(4 alpha^2)   (m <= n),
// extended to m > n by <m_-|n_+> = (-1)^{m-n} <n_-|m_+> for real alpha.
double coherent_overlap(int m, int n, double alpha);

}  // namespace qrm
