// exact.hpp — Numerically exact spectrum via parity-resolved truncated
// diagonalization. The Z2 symmetry P = sigma_z exp(i pi a^dag a) splits the
// Hamiltonian into two symmetric tridiagonal blocks in the Fock basis.

#pragma once

#include "qrm/model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qrm {

enum class Parity { even, odd };

inline std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct TridiagonalBlock {
    Parity parity;
    int size;
    Eigen::VectorXd diag;     // diag[m] = m*omega + s*(-1)^m * delta/2
    Eigen::VectorXd offdiag;  // offdiag[m] = g*sqrt(m+1), length size-1
};

struct ExactSpectrum {
    ModelParams params;
    int truncation;  // Fock-space size per parity block at convergence
    std::vector<std::pair<double, Parity>> energies;  // sorted ascending
    int converged_count;
};

// Even sector carries +delta/2 at m = 0.
TridiagonalBlock build_parity_block(const ModelParams& params, Parity parity, int size);

// Eigenvalues of one block, ascending.
Eigen::VectorXd block_eigenvalues(const TridiagonalBlock& block);

// Diagonalizes both parity blocks with adaptive truncation: start at
// max(64, 8*n_levels + ceil(16 (g/omega)^2)) and double until the lowest
// n_levels merged energies move by less than tol. Throws if not converged
// by N = 16384.
ExactSpectrum exact_spectrum(const ModelParams& params, int n_levels, double tol);

}  // namespace qrm
