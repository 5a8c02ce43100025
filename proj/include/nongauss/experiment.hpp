#pragma once

#include <cmath>
#include <string>

#include "nongauss/errors.hpp"

namespace nongauss {

enum class Scheme { SingleMode, TwoMode };

std::string to_string(Scheme scheme);

// Squeezing strength as lambda = tanh r, 0 <= lambda < 1.
struct SqueezingSpec {
    double lambda = 0.0;

    double r() const { return std::atanh(lambda); }
};

// On-off detector: quantum efficiency eta and mean dark counts nu per gate.
struct DetectorModel {
    double efficiency = 1.0;  // eta, in (0, 1]
    double dark_mean = 0.0;   // nu, >= 0
};

// Beam-splitter network parameters. The interferometer split is fixed at 50:50.
struct OpticalSetup {
    double tap_transmittance = 0.9;   // T, in (0, 1)
    double path_transmittance = 1.0;  // T_L, in (0, 1]
    static constexpr double interferometer_split = 0.5;  // tau

    double tap_reflectance() const { return 1.0 - tap_transmittance; }    // R
    double path_reflectance() const { return 1.0 - path_transmittance; }  // R_L

    // tan(theta) = sqrt(R/T)
    double tap_angle() const {
        return std::atan(std::sqrt(tap_reflectance() / tap_transmittance));
    }
    // tan(xi) = sqrt(R_L/T_L)
    double loss_angle() const {
        return std::atan(std::sqrt(path_reflectance() / path_transmittance));
    }
    // tan(phi) = 1 for a balanced interferometer
    static double split_angle() { return std::atan(1.0); }
};

// Full physical parameterization of one experiment. The ideal setup is the
// special case T_L = 1, eta = 1, nu = 0.
struct ExperimentConfig {
    SqueezingSpec squeezing;
    OpticalSetup setup;
    DetectorModel detector;
    Scheme scheme = Scheme::SingleMode;

    bool is_ideal() const {
        return setup.path_transmittance == 1.0 && detector.efficiency == 1.0 &&
               detector.dark_mean == 0.0;
    }

    // Throws std::invalid_argument on out-of-range fields.
    void validate() const;

    static ExperimentConfig ideal(double lambda, double tap_transmittance, Scheme scheme);
    static ExperimentConfig practical(double lambda, double tap_transmittance,
                                      double path_transmittance, double efficiency,
                                      double dark_mean, Scheme scheme);
};

// Effective tap/detector reflectance weights: gamma'_ij for the single-mode
// scheme, gamma'^(2)_i for the two-mode scheme. The ideal values are the
// (T_L, eta) = (1, 1) specialization.
struct GammaTable {
    Scheme scheme = Scheme::SingleMode;
    double single[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double two[2] = {0.0, 0.0};
};

GammaTable gamma_table(const ExperimentConfig& config);

// Reduce an angle to [0, 2*pi).
double normalize_phase(double phase);

}  // namespace nongauss
