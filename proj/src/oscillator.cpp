#include "qrm/oscillator.hpp"

#include "qrm/poly.hpp"

#include <cmath>

namespace qrm {

double displaced_energy(int n, const ModelParams& params) {
    if (n < 0) throw std::invalid_argument("displaced_energy: n must be >= 0");
    params.validate();
    return n * params.omega - params.g * params.g / params.omega;
}

double coherent_overlap(int m, int n, double alpha) {
    if (m < 0 || n < 0) throw std::invalid_argument("coherent_overlap: indices must be >= 0");
    if (m > n) {
        const double sign = ((m - n) % 2 == 0) ? 1.0 : -1.0;
        return sign * coherent_overlap(n, m, alpha);
    }
    const double a2 = alpha * alpha;
    const double fact_ratio = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)));
    const double amp = (m == n) ? 1.0 : std::pow(std::abs(2.0 * alpha), n - m);
    return std::exp(-2.0 * a2) * amp * fact_ratio * laguerre(m, n - m, 4.0 * a2);
}

}  // namespace qrm
