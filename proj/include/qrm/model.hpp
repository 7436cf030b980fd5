// model.hpp — Model parameters and method tags for the quantum Rabi model.

#pragma once

#include <stdexcept>
#include <string>

namespace qrm {

// Qubit splitting delta, oscillator frequency omega, coupling g (hbar = 1).
// Only the dimensionless ratios g/omega and delta/omega enter the physics.
struct ModelParams {
    double delta{0.0};
    double omega{1.0};
    double g{0.0};

    double g_ratio() const { return g / omega; }
    double delta_ratio() const { return delta / omega; }

    void validate() const {
        if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
        if (delta < 0.0) throw std::invalid_argument("ModelParams: delta must be >= 0");
        if (g < 0.0) throw std::invalid_argument("ModelParams: g must be >= 0");
    }
};

enum class Method { AA, GAA_K, GAA_L, GRWA, GRWA_GAA, EXACT };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::AA: return "AA";
        case Method::GAA_K: return "GAA_K";
        case Method::GAA_L: return "GAA_L";
        case Method::GRWA: return "GRWA";
        case Method::GRWA_GAA: return "GRWA_GAA";
        case Method::EXACT: return "EXACT";
    }
    throw std::logic_error("unknown Method");
}

inline Method method_from_string(const std::string& s) {
    if (s == "AA") return Method::AA;
    if (s == "GAA_K") return Method::GAA_K;
    if (s == "GAA_L") return Method::GAA_L;
    if (s == "GRWA") return Method::GRWA;
    if (s == "GRWA_GAA") return Method::GRWA_GAA;
    if (s == "EXACT") return Method::EXACT;
    throw std::invalid_argument("unknown method name: " + s);
}

}  // namespace qrm
