#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nongauss/dense_coding.hpp"
#include "nongauss/experiment.hpp"

namespace nongauss {

inline constexpr const char* kEngineVersion = "0.1.0";

// One parameter sweep: grid, per-point values, and provenance metadata.
struct SweepResult {
    std::string kind;      // variance | mi | pdet | mean-photon | pdf
    std::string param;     // swept parameter name
    std::vector<double> grid;
    std::vector<double> value_ng;
    std::vector<double> value_ref;  // empty when the kind has no reference
    std::vector<double> gain_db;    // variance scans only
    std::vector<std::pair<std::string, std::string>> metadata;

    // Throws std::invalid_argument when the grid is not strictly increasing
    // or the value sequences disagree in length.
    void validate() const;
};

std::vector<double> linspace(double lo, double hi, int points);

// Metadata block shared by all sweep kinds (config snapshot + engine version).
std::vector<std::pair<std::string, std::string>> config_metadata(const ExperimentConfig& config);

SweepResult variance_scan(const ExperimentConfig& base, const std::vector<double>& lambdas,
                          double quad_phase);
SweepResult mi_scan(const ExperimentConfig& base, const std::vector<double>& lambdas,
                    const SignalAlphabet& alphabet);
SweepResult pdet_scan(const ExperimentConfig& base, const std::vector<double>& lambdas);
SweepResult mean_photon_scan(const ExperimentConfig& base, const std::vector<double>& lambdas);

// Smallest root of g on [lo, hi]: linear scan at `resolution` followed by
// bisection. Returns NaN when g does not change sign.
double find_crossover(const std::function<double(double)>& g, double lo, double hi,
                      double resolution);

// lambda* of v_ng(lambda) = v_ref(lambda) for the given configuration.
double variance_crossover(const ExperimentConfig& base, double lo, double hi,
                          double resolution);

// lambda* of mi_ng = mi_ref for the given configuration and alphabet.
double mi_crossover(const ExperimentConfig& base, const SignalAlphabet& alphabet,
                    double lo, double hi, double resolution);

}  // namespace nongauss
