#include "qrm/exact.hpp"

#include "qrm/approx.hpp"
#include "qrm/crossings.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace qrm;

TEST_CASE("parity block construction") {
    const auto block = build_parity_block(ModelParams{1.2, 1.0, 0.5}, Parity::even, 4);
    CHECK(block.diag[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(block.diag[1] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(block.diag[2] == doctest::Approx(2.6).epsilon(1e-15));
    CHECK(block.diag[3] == doctest::Approx(2.4).epsilon(1e-15));
    CHECK(block.offdiag[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(block.offdiag[1] == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(block.offdiag[2] == doctest::Approx(0.5 * std::sqrt(3.0)).epsilon(1e-15));

    const auto decoupled = build_parity_block(ModelParams{0.8, 1.0, 0.0}, Parity::odd, 6);
    for (int m = 0; m < 5; ++m) CHECK(decoupled.offdiag[m] == 0.0);
    for (int m = 0; m < 6; ++m) {
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;
        CHECK(decoupled.diag[m] == doctest::Approx(m + sign * 0.4).epsilon(1e-15));
    }
    CHECK_THROWS_AS(build_parity_block(ModelParams{}, Parity::even, 1),
                    std::invalid_argument);
}

TEST_CASE("decoupled limit g = 0") {
    const auto spec = exact_spectrum(ModelParams{1.2, 1.0, 0.0}, 6, 1e-10);
    const double expected[] = {-0.6, 0.4, 0.6, 1.4, 1.6, 2.4};
    REQUIRE(spec.energies.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(spec.energies[i].first == doctest::Approx(expected[i]).epsilon(1e-10));
    // Ground state -delta/2 sits in the odd sector.
    CHECK(spec.energies[0].second == Parity::odd);
    CHECK(spec.energies[2].second == Parity::even);
}

TEST_CASE("degenerate qubit limit delta = 0") {
    for (double g : {0.5, 1.0, 2.0}) {
        const auto spec = exact_spectrum(ModelParams{0.0, 1.0, g}, 6, 1e-8);
        for (int n = 0; n < 3; ++n) {
            CHECK(spec.energies[2 * n].first == doctest::Approx(n - g * g).epsilon(1e-8));
            CHECK(spec.energies[2 * n + 1].first ==
                  doctest::Approx(n - g * g).epsilon(1e-8));
        }
    }
}

TEST_CASE("Juddian degeneracy of pair n = 2 at delta = 1.2") {
    const auto spec = exact_spectrum(ModelParams{1.2, 1.0, 0.3074}, 8, 1e-8);
    CHECK(std::abs(spec.energies[5].first - spec.energies[4].first) < 2e-3);
}

TEST_CASE("variational monotonicity and truncation convergence") {
    const ModelParams p{2.0, 1.0, 1.5};
    auto eigen_at = [&](int size) {
        std::vector<double> merged;
        for (Parity parity : {Parity::even, Parity::odd}) {
            const auto ev = block_eigenvalues(build_parity_block(p, parity, size));
            merged.insert(merged.end(), ev.data(), ev.data() + ev.size());
        }
        std::sort(merged.begin(), merged.end());
        return merged;
    };
    const auto small = eigen_at(64);
    const auto medium = eigen_at(128);
    const auto large = eigen_at(256);
    for (int i = 0; i < 10; ++i) {
        CHECK(medium[i] <= small[i] + 1e-12);
        CHECK(large[i] <= medium[i] + 1e-12);
        CHECK(std::abs(large[i] - medium[i]) < 1e-8);
    }
}

TEST_CASE("exact degeneracies at crossing-module roots") {
    for (int n : {1, 2}) {
        for (double delta : {0.5, 1.2, 2.0}) {
            for (const auto& root : find_crossings(n, delta, 1.0)) {
                const auto spec =
                    exact_spectrum(ModelParams{delta, 1.0, root.g_star}, 2 * n + 2, 1e-10);
                const auto& lo = spec.energies[2 * n];
                const auto& hi = spec.energies[2 * n + 1];
                CHECK_MESSAGE(hi.first - lo.first < 1e-6, "n=", n, " delta=", delta);
                CHECK(lo.second != hi.second);
                CHECK_MESSAGE(std::abs(lo.first - root.energy) < 1e-5, "n=", n,
                              " delta=", delta);
            }
        }
    }
}

TEST_CASE("pair gaps track the AA prediction at small delta") {
    const ModelParams p{0.2, 1.0, 1.5};
    const auto spec = exact_spectrum(p, 10, 1e-10);
    for (int n = 0; n <= 4; ++n) {
        const double exact_gap = spec.energies[2 * n + 1].first - spec.energies[2 * n].first;
        const double aa = aa_pair(n, p).e_plus - aa_pair(n, p).e_minus;
        CHECK_MESSAGE(std::abs(exact_gap - aa) <= 0.1 * std::max(exact_gap, aa), "n=", n);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(exact_spectrum(ModelParams{1.0, 1.0, 0.5}, 0, 1e-8),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_spectrum(ModelParams{1.0, 1.0, 0.5}, 4, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_spectrum(ModelParams{1.0, -1.0, 0.5}, 4, 1e-8),
                    std::invalid_argument);
}
