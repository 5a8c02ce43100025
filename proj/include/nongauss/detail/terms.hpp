#pragma once

#include <array>
#include <cmath>

#include "nongauss/experiment.hpp"

namespace nongauss::detail {

// Per-component closed-form ingredients, shared by the homodyne, Wigner,
// variance and channel-matrix formulas. Everything is built from t = T_L T
// and the per-component effective reflectance b = R_L + gamma'; the ideal
// formulas are the (T_L, eta, nu) = (1, 1, 0) specialization.
struct ComponentTerms {
    double weight;  // (-1)^{i+j} e^{-(2-i-j) nu}
    double big_e;   // E = 1 - lambda^2 a^2 (single) or 1 - lambda^2 a_i a_j (two-mode)
    double big_d;   // D at phi = 0
    double big_f;   // Wigner p-denominator, single-mode only
};

inline double dark_weight(int i, int j, double nu) {
    const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(-static_cast<double>(2 - i - j) * nu);
}

// Index order: component (i,j) at position 2*i + j.
inline std::array<ComponentTerms, 4> component_terms(const ExperimentConfig& config) {
    const double lambda = config.squeezing.lambda;
    const double t = config.setup.path_transmittance * config.setup.tap_transmittance;
    const double r_l = config.setup.path_reflectance();
    const double nu = config.detector.dark_mean;
    const GammaTable gamma = gamma_table(config);

    std::array<ComponentTerms, 4> terms;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            ComponentTerms& c = terms[2 * i + j];
            c.weight = dark_weight(i, j, nu);
            if (config.scheme == Scheme::SingleMode) {
                const double b = r_l + gamma.single[i][j];
                const double a = t + b;
                c.big_e = 1.0 - lambda * lambda * a * a;
                c.big_d = (1.0 - lambda * t) * (1.0 - lambda * t) - lambda * lambda * b * b;
                const double f_arg = t - b;
                c.big_f = 1.0 - lambda * lambda * f_arg * f_arg;
            } else {
                const double b_i = r_l + gamma.two[i];
                const double b_j = r_l + gamma.two[j];
                c.big_e = 1.0 - lambda * lambda * (t + b_i) * (t + b_j);
                c.big_d = (1.0 - lambda * t) * (1.0 - lambda * t) - lambda * lambda * b_i * b_j;
                c.big_f = 0.0;
            }
        }
    }
    return terms;
}

}  // namespace nongauss::detail
