#include "qrm/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace qrm {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Scaled recurrence on p_k = P_k^n / (k!)^2:
//   p_0 = 1, p_1 = 4g^2 + Delta^2/4 - 1,
//   p_k = ((4k g^2 + d4 - k^2)/k^2) p_{k-1} - (4(n-k+1) g^2 / (k(k-1))) p_{k-2}.
double scaled_constraint(int n, int k, double g, double delta) {
    const double g2 = g * g;
    const double d4 = delta * delta / 4.0;
    double pm1 = 1.0;  // p_0
    if (k == 0) return pm1;
    double p = 4.0 * g2 + d4 - 1.0;  // p_1
    for (int j = 2; j <= k; ++j) {
        const double jd = static_cast<double>(j);
        const double a = (4.0 * jd * g2 + d4 - jd * jd) / (jd * jd);
        const double b = 4.0 * (n - j + 1) * g2 / (jd * (jd - 1.0));
        const double next = a * p - b * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

// Raw recurrence in exact rational arithmetic; the double inputs are converted
// exactly. Independent of the scaled path above.
Rational rational_constraint(int n, int k, double g, double delta) {
    const Rational g2 = Rational(g) * Rational(g);
    const Rational d4 = Rational(delta) * Rational(delta) / 4;
    Rational pm1 = 1;
    if (k == 0) return pm1;
    Rational p = 4 * g2 + d4 - 1;
    for (int j = 2; j <= k; ++j) {
        const Rational a = 4 * j * g2 + d4 - j * j;
        const Rational b = Rational(4 * j) * (j - 1) * (n - j + 1) * g2;
        const Rational next = a * p - b * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

double sq_factorial(int k) { return std::exp(2.0 * std::lgamma(k + 1.0)); }

}  // namespace

double laguerre(int n, int k, double x) {
    if (n < 0 || k < 0) throw std::invalid_argument("laguerre: n and k must be >= 0");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + k - x;
    for (int m = 1; m < n; ++m) {
        const double next = ((2.0 * m + k + 1.0 - x) * l - (m + k) * lm1) / (m + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

double constraint_poly(int n, int k, const ModelParams& params,
                       const PolyEvalSettings& settings) {
    settings.validate();
    params.validate();
    if (k < 0 || k > n) throw std::invalid_argument("constraint_poly: requires 0 <= k <= n");
    if (n > settings.max_order)
        throw std::invalid_argument("constraint_poly: n exceeds max_order");
    const double g = params.g_ratio();
    const double delta = params.delta_ratio();
    if (settings.scaling_mode == ScalingMode::RationalOracle)
        return rational_constraint(n, k, g, delta).convert_to<double>();
    return scaled_constraint(n, k, g, delta) * sq_factorial(k);
}

double normalized_constraint(int n, const ModelParams& params,
                             const PolyEvalSettings& settings) {
    settings.validate();
    params.validate();
    if (n < 0) throw std::invalid_argument("normalized_constraint: n must be >= 0");
    if (n > settings.max_order)
        throw std::invalid_argument("normalized_constraint: n exceeds max_order");
    const double g = params.g_ratio();
    const double delta = params.delta_ratio();
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (settings.scaling_mode == ScalingMode::RationalOracle) {
        Rational norm = 1;
        for (int j = 1; j <= n; ++j) norm *= j * j;
        return (rational_constraint(n, n, g, delta) / norm).convert_to<double>() * sign;
    }
    // K_n = P_n^n / ((-1)^n (n!)^2) = (-1)^n p_n with p_n the scaled value.
    return sign * scaled_constraint(n, n, g, delta);
}

double constraint_at_zero_coupling(int n, double delta) {
    if (n < 0) throw std::invalid_argument("constraint_at_zero_coupling: n must be >= 0");
    const double d4 = delta * delta / 4.0;
    double prod = 1.0;
    for (int k = 1; k <= n; ++k) prod *= d4 - static_cast<double>(k) * k;
    return prod;
}

double corrected_displacement_sq(int n, const ModelParams& params) {
    if (n < 0) throw std::invalid_argument("corrected_displacement_sq: n must be >= 0");
    params.validate();
    const double g = params.g_ratio();
    const double delta = params.delta_ratio();
    if (n == 0) return 4.0 * g * g;
    const double nth_root_fact = std::exp(std::lgamma(n + 1.0) / n);
    return 4.0 * g * g + delta * delta / (4.0 * nth_root_fact);
}

}  // namespace qrm
