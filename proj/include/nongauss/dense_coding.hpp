#pragma once

#include <Eigen/Dense>
#include <array>

#include "nongauss/experiment.hpp"

namespace nongauss {

// Error function, |error| <= 1e-12 against the defining integral.
double erf(double x);

// QPSK displacement alphabet: four symbols a_kl with quadrature means
// (x_s, p_s) in {+-sqrt(2) alpha}^2. Bit k is the sign of x_s, bit l the
// sign of p_s (0 -> +).
struct SignalAlphabet {
    double alpha = 1.5;

    std::array<double, 2> symbol(int k, int l) const {
        const double a = std::sqrt(2.0) * alpha;
        return {k == 0 ? a : -a, l == 0 ? a : -a};
    }
};

// Omega'_ij(lambda): inverse per-axis standard deviations of the Bell-pdf
// components; the erf arguments of the channel-matrix entries.
struct OmegaTable {
    double value[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
};

OmegaTable omega_table(const ExperimentConfig& config);

// Row-stochastic 4x4 transition matrix P(b_mn | a_kl); row index 2k+l,
// column index 2m+n.
struct ChannelMatrix {
    Eigen::Matrix4d p = Eigen::Matrix4d::Zero();

    // Throws InvalidDistribution if entries or row sums are out of contract.
    void validate(double tol = 1e-9) const;
};

// Channel matrix of the QPSK dense-coding scheme on the conditional two-mode
// state: quadrant integrals of the signed Bell mixture displaced by each
// symbol.
ChannelMatrix channel_matrix(const ExperimentConfig& config, const SignalAlphabet& alphabet);

// Same decision rule applied to the un-subtracted two-mode squeezed vacuum
// (optionally path-attenuated): a single centered isotropic Gaussian.
ChannelMatrix reference_channel_matrix(double lambda, const SignalAlphabet& alphabet,
                                       bool apply_loss, double path_transmittance);

// I(A;B) in bits; 0 log 0 = 0.
double mutual_information(const ChannelMatrix& matrix,
                          const Eigen::Vector4d& priors = Eigen::Vector4d::Constant(0.25));

}  // namespace nongauss
