#include "qrm/crossings.hpp"

#include "qrm/poly.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>

namespace qrm {

namespace {

constexpr int kGridPoints = 2048;
constexpr double kBracketWidth = 1e-13;
constexpr double kTangencyScan = 1e-10;
constexpr double kTangencyAccept = 1e-12;

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double flo) {
    double fhi = f(hi);
    while (hi - lo > kBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // Secant polish drives the residual down to evaluation noise.
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    double best_x = std::abs(f0) < std::abs(f1) ? x0 : x1;
    double best_f = std::min(std::abs(f0), std::abs(f1));
    for (int it = 0; it < 8 && f1 != f0; ++it) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!std::isfinite(x2)) break;
        const double f2 = f(x2);
        if (std::abs(f2) < best_f) {
            best_f = std::abs(f2);
            best_x = x2;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (f2 == 0.0) break;
    }
    return best_x;
}

// Golden-section minimum of |f| on [lo, hi]; returns (x, |f(x)|).
std::pair<double, double> minimize_abs(const std::function<double(double)>& f, double lo,
                                       double hi) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
    for (int it = 0; it < 200 && b - a > kBracketWidth; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = std::abs(f(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = std::abs(f(x2));
        }
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

double laguerre_largest_zero(int n) {
    if (n < 0) throw std::invalid_argument("laguerre_largest_zero: n must be >= 0");
    if (n == 0) return 0.0;
    // Golub-Welsch: zeros of L_n are the eigenvalues of the Jacobi matrix
    // diag 2i+1, offdiag i+1.
    Eigen::VectorXd diag(n), offdiag(std::max(0, n - 1));
    for (int i = 0; i < n; ++i) {
        diag[i] = 2.0 * i + 1.0;
        if (i + 1 < n) offdiag[i] = i + 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[n - 1];
}

std::vector<JuddianPoint> find_crossings(int n, double delta, double omega) {
    if (n < 0) throw std::invalid_argument("find_crossings: n must be >= 0");
    if (delta < 0.0) throw std::invalid_argument("find_crossings: delta must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("find_crossings: omega must be > 0");
    if (n == 0) return {};  // K_0 = 1, no crossings in the lowest pair

    const double dr = delta / omega;
    const PolyEvalSettings settings{std::max(20, n), ScalingMode::PerStepScaled};
    const std::function<double(double)> kn = [&](double x) {
        return normalized_constraint(n, ModelParams{dr, 1.0, std::sqrt(x)}, settings);
    };

    // Roots in x = (g/omega)^2 migrate from the Laguerre zeros by O(delta^2).
    const double x_max = laguerre_largest_zero(n) / 4.0 + dr * dr / 8.0 + 1.0;
    const double step = x_max / kGridPoints;

    std::vector<JuddianPoint> roots;
    double x_prev = step;
    double f_prev = kn(x_prev);
    for (int i = 2; i <= kGridPoints; ++i) {
        const double x = i * step;
        const double f = kn(x);
        double x_root = -1.0;
        if (f_prev == 0.0) {
            x_root = x_prev;
        } else if ((f_prev < 0.0) != (f < 0.0)) {
            x_root = bisect_root(kn, x_prev, x, f_prev);
        } else if (std::min(std::abs(f_prev), std::abs(f)) < kTangencyScan) {
            // Possible tangency: accept only if the local minimum is a true zero.
            const auto [xm, fm] = minimize_abs(kn, std::max(step / 2, x_prev - step), x + step);
            if (fm < kTangencyAccept) x_root = xm;
        }
        if (x_root > 0.0 && (roots.empty() ||
                             std::abs(std::sqrt(x_root) - roots.back().g_star / omega) > 1e-10)) {
            const double g_star = std::sqrt(x_root) * omega;
            roots.push_back(JuddianPoint{n, g_star, delta,
                                         n * omega - g_star * g_star / omega,
                                         std::abs(kn(x_root))});
        }
        x_prev = x;
        f_prev = f;
    }
    return roots;
}

std::pair<int, int> crossing_count_certificate(int n, double delta, double omega) {
    if (n < 0) throw std::invalid_argument("crossing_count_certificate: n must be >= 0");
    if (!(omega > 0.0))
        throw std::invalid_argument("crossing_count_certificate: omega must be > 0");
    const double dr = delta / omega;
    const double half = dr / 2.0;
    if (dr > 0.0 && std::abs(half - std::round(half)) < 1e-9)
        throw std::domain_error(
            "crossing_count_certificate: delta/omega on an even integer is a theorem boundary");
    const int expected = std::max(0, n - static_cast<int>(std::floor(half)));
    const int found = static_cast<int>(find_crossings(n, delta, omega).size());
    return {expected, found};
}

std::vector<double> zero_coupling_degeneracies(int n) {
    if (n < 0) throw std::invalid_argument("zero_coupling_degeneracies: n must be >= 0");
    std::vector<double> deltas;
    deltas.reserve(n);
    for (int k = 1; k <= n; ++k) deltas.push_back(2.0 * k);
    return deltas;
}

}  // namespace qrm
