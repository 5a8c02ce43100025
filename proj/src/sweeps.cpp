#include "nongauss/sweeps.hpp"

#include <cmath>

#include "nongauss/closed_form.hpp"
#include "nongauss/io.hpp"

namespace nongauss {

namespace {

ExperimentConfig with_lambda(const ExperimentConfig& base, double lambda) {
    ExperimentConfig config = base;
    config.squeezing.lambda = lambda;
    return config;
}

}  // namespace

void SweepResult::validate() const {
    for (size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("sweep grid must be strictly increasing");
        }
    }
    if (value_ng.size() != grid.size()) {
        throw std::invalid_argument("value sequence length must match the grid");
    }
    if (!value_ref.empty() && value_ref.size() != grid.size()) {
        throw std::invalid_argument("reference sequence length must match the grid");
    }
    if (!gain_db.empty() && gain_db.size() != grid.size()) {
        throw std::invalid_argument("gain sequence length must match the grid");
    }
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    }
    return grid;
}

std::vector<std::pair<std::string, std::string>> config_metadata(const ExperimentConfig& config) {
    return {
        {"engine_version", kEngineVersion},
        {"scheme", to_string(config.scheme)},
        {"T", format_double(config.setup.tap_transmittance)},
        {"TL", format_double(config.setup.path_transmittance)},
        {"eta", format_double(config.detector.efficiency)},
        {"nu", format_double(config.detector.dark_mean)},
    };
}

SweepResult variance_scan(const ExperimentConfig& base, const std::vector<double>& lambdas,
                          double quad_phase) {
    const bool lossy = !base.is_ideal();
    SweepResult result;
    result.kind = "variance";
    result.param = "lambda";
    result.grid = lambdas;
    result.metadata = config_metadata(base);
    result.metadata.emplace_back("phase", format_double(quad_phase));
    for (double lambda : lambdas) {
        const double v = variance(with_lambda(base, lambda), quad_phase);
        result.value_ng.push_back(v);
        result.value_ref.push_back(reference_variance(lambda, base.scheme, lossy,
                                                      base.setup.path_transmittance));
        result.gain_db.push_back(squeezing_gain_db(v, base.scheme));
    }
    result.validate();
    return result;
}

SweepResult mi_scan(const ExperimentConfig& base, const std::vector<double>& lambdas,
                    const SignalAlphabet& alphabet) {
    const bool lossy = !base.is_ideal();
    SweepResult result;
    result.kind = "mi";
    result.param = "lambda";
    result.grid = lambdas;
    result.metadata = config_metadata(base);
    result.metadata.emplace_back("alpha", format_double(alphabet.alpha));
    for (double lambda : lambdas) {
        result.value_ng.push_back(
            mutual_information(channel_matrix(with_lambda(base, lambda), alphabet)));
        result.value_ref.push_back(mutual_information(reference_channel_matrix(
            lambda, alphabet, lossy, base.setup.path_transmittance)));
    }
    result.validate();
    return result;
}

SweepResult pdet_scan(const ExperimentConfig& base, const std::vector<double>& lambdas) {
    SweepResult result;
    result.kind = "pdet";
    result.param = "lambda";
    result.grid = lambdas;
    result.metadata = config_metadata(base);
    for (double lambda : lambdas) {
        result.value_ng.push_back(detection_probability(with_lambda(base, lambda)));
    }
    result.validate();
    return result;
}

SweepResult mean_photon_scan(const ExperimentConfig& base, const std::vector<double>& lambdas) {
    SweepResult result;
    result.kind = "mean-photon";
    result.param = "lambda";
    result.grid = lambdas;
    result.metadata = config_metadata(base);
    for (double lambda : lambdas) {
        result.value_ng.push_back(mean_photon_single_ideal(with_lambda(base, lambda)));
        result.value_ref.push_back(lambda * lambda / (1.0 - lambda * lambda));
    }
    result.validate();
    return result;
}

double find_crossover(const std::function<double(double)>& g, double lo, double hi,
                      double resolution) {
    double prev_x = lo;
    double prev_g = g(lo);
    const int steps = static_cast<int>(std::ceil((hi - lo) / resolution));
    for (int i = 1; i <= steps; ++i) {
        const double x = std::min(lo + i * resolution, hi);
        const double gx = g(x);
        if (prev_g == 0.0) return prev_x;
        if ((prev_g < 0.0) != (gx < 0.0)) {
            double a = prev_x, b = x, ga = prev_g;
            for (int iter = 0; iter < 60; ++iter) {
                const double mid = 0.5 * (a + b);
                const double gm = g(mid);
                if (gm == 0.0) return mid;
                if ((ga < 0.0) != (gm < 0.0)) {
                    b = mid;
                } else {
                    a = mid;
                    ga = gm;
                }
            }
            return 0.5 * (a + b);
        }
        prev_x = x;
        prev_g = gx;
    }
    return std::nan("");
}

double variance_crossover(const ExperimentConfig& base, double lo, double hi,
                          double resolution) {
    const bool lossy = !base.is_ideal();
    return find_crossover(
        [&](double lambda) {
            return variance(with_lambda(base, lambda), 0.0) -
                   reference_variance(lambda, base.scheme, lossy,
                                      base.setup.path_transmittance);
        },
        lo, hi, resolution);
}

double mi_crossover(const ExperimentConfig& base, const SignalAlphabet& alphabet,
                    double lo, double hi, double resolution) {
    const bool lossy = !base.is_ideal();
    return find_crossover(
        [&](double lambda) {
            return mutual_information(channel_matrix(with_lambda(base, lambda), alphabet)) -
                   mutual_information(reference_channel_matrix(
                       lambda, alphabet, lossy, base.setup.path_transmittance));
        },
        lo, hi, resolution);
}

}  // namespace nongauss
