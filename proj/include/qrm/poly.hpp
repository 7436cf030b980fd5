// poly.hpp — Laguerre polynomials, constraint-polynomial recurrence and the
// corrected displacement arguments. Everything here works in omega = 1 units;
// functions taking ModelParams rescale by omega internally.

#pragma once

#include "qrm/model.hpp"

namespace qrm {

enum class ScalingMode {
    PerStepScaled,   // default: recurrence on P_k/(k!)^2, intermediates stay O(1)
    RationalOracle,  // raw recurrence in exact rational arithmetic
};

struct PolyEvalSettings {
    int max_order{20};  // largest pair index n supported
    ScalingMode scaling_mode{ScalingMode::PerStepScaled};

    void validate() const {
        if (max_order < 1) throw std::invalid_argument("PolyEvalSettings: max_order must be >= 1");
    }
};

// Associated Laguerre polynomial L_n^k(x) by upward three-term recurrence in n.
// k = 0 gives the standard Laguerre polynomial.
double laguerre(int n, int k, double x);

// Constraint polynomial P_k^n(g, Delta) of the recurrence
//   P_0^n = 1,  P_1^n = 4g^2 + Delta^2/4 - 1,
//   P_k^n = (4k g^2 + Delta^2/4 - k^2) P_{k-1}^n - 4k(k-1)(n-k+1) g^2 P_{k-2}^n,
// with g, Delta taken as the dimensionless ratios g/omega, Delta/omega.
double constraint_poly(int n, int k, const ModelParams& params,
                       const PolyEvalSettings& settings = {});

// Normalized constraint polynomial K_n = P_n^n(g, Delta) / P_n^n(0, 0),
// with P_n^n(0,0) = (-1)^n (n!)^2.  K_n(g, 0) = L_n(4 g^2).
double normalized_constraint(int n, const ModelParams& params,
                             const PolyEvalSettings& settings = {});

// P_n^n(0, Delta) = prod_{k=1..n} (Delta^2/4 - k^2); empty product for n = 0.
double constraint_at_zero_coupling(int n, double delta);

// Corrected Laguerre argument 4*alpha_n^2 = 4g^2 + Delta^2 / (4 (n!)^{1/n})
// for n >= 1, and 4g^2 for n = 0, in omega = 1 units.
double corrected_displacement_sq(int n, const ModelParams& params);

}  // namespace qrm
