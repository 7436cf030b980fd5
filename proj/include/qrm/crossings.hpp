// crossings.hpp — Juddian (exceptional) points: roots of the normalized
// constraint polynomial K_n in g at fixed delta, the crossing-count law and
// the zero-coupling degeneracies.

#pragma once

#include "qrm/model.hpp"

#include <utility>
#include <vector>

namespace qrm {

struct JuddianPoint {
    int n;           // pair index
    double g_star;   // crossing coupling, > 0
    double delta;
    double energy;   // n*omega - g_star^2/omega
    double residual; // |K_n(g_star, delta)|
};

// All positive roots in g of K_n(g/omega, delta/omega), ascending. Works by
// substituting x = (g/omega)^2, bracketing sign changes on a dense grid over
// (0, x_max] and bisecting each bracket below width 1e-13.
std::vector<JuddianPoint> find_crossings(int n, double delta, double omega);

// Crossing-count law: expected = max(0, n - floor(delta/(2 omega))) valid for
// delta/omega strictly between consecutive even integers; found = number of
// roots located. Throws for positive even-integer delta/omega.
std::pair<int, int> crossing_count_certificate(int n, double delta, double omega);

// Positive roots in delta of prod_{k=1..n}(delta^2/4 - k^2): {2, 4, ..., 2n}.
std::vector<double> zero_coupling_degeneracies(int n);

// Largest zero of the standard Laguerre polynomial L_n (Golub-Welsch); 0 for n = 0.
double laguerre_largest_zero(int n);

}  // namespace qrm
