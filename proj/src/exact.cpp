#include "qrm/exact.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qrm {

namespace {

std::vector<std::pair<double, Parity>> merged_spectrum(const ModelParams& params, int size) {
    std::vector<std::pair<double, Parity>> merged;
    merged.reserve(2 * static_cast<std::size_t>(size));
    for (Parity p : {Parity::even, Parity::odd}) {
        const Eigen::VectorXd ev = block_eigenvalues(build_parity_block(params, p, size));
        for (int i = 0; i < ev.size(); ++i) merged.emplace_back(ev[i], p);
    }
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return merged;
}

}  // namespace

TridiagonalBlock build_parity_block(const ModelParams& params, Parity parity, int size) {
    params.validate();
    if (size < 2) throw std::invalid_argument("build_parity_block: size must be >= 2");
    const double s = (parity == Parity::even) ? 1.0 : -1.0;
    TridiagonalBlock block{parity, size, Eigen::VectorXd(size), Eigen::VectorXd(size - 1)};
    for (int m = 0; m < size; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        block.diag[m] = m * params.omega + s * sign * 0.5 * params.delta;
        if (m + 1 < size) block.offdiag[m] = params.g * std::sqrt(m + 1.0);
    }
    return block;
}

Eigen::VectorXd block_eigenvalues(const TridiagonalBlock& block) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(block.diag, block.offdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("block_eigenvalues: tridiagonal eigensolver failed");
    return solver.eigenvalues();
}

ExactSpectrum exact_spectrum(const ModelParams& params, int n_levels, double tol) {
    params.validate();
    if (n_levels < 1) throw std::invalid_argument("exact_spectrum: n_levels must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("exact_spectrum: tol must be > 0");

    const double gr = params.g_ratio();
    int size = std::max(64, 8 * n_levels + static_cast<int>(std::ceil(16.0 * gr * gr)));
    constexpr int kMaxSize = 16384;

    auto current = merged_spectrum(params, size);
    while (true) {
        const int next_size = 2 * size;
        if (next_size > kMaxSize)
            throw std::runtime_error("exact_spectrum: no convergence by truncation 16384");
        auto refined = merged_spectrum(params, next_size);
        double max_shift = 0.0;
        for (int i = 0; i < n_levels; ++i)
            max_shift = std::max(max_shift, std::abs(refined[i].first - current[i].first));
        current = std::move(refined);
        size = next_size;
        if (max_shift < tol) break;
    }

    current.resize(n_levels);
    return ExactSpectrum{params, size, std::move(current), n_levels};
}

}  // namespace qrm
