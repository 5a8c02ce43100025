#pragma once

#include "nongauss/experiment.hpp"
#include "nongauss/mixture.hpp"

namespace nongauss {

// Success probability of the on/on event selection.
double detection_probability(const ExperimentConfig& config);

// Homodyne statistics of the conditional state. Single-mode: 1-D mixture in
// x_phi. Two-mode: isotropic 2-D mixture in the Bell variables (x, p); the
// quad_phase argument is ignored for the two-mode scheme (the distribution is
// phase-symmetric).
SignedGaussianMixture homodyne_mixture(const ExperimentConfig& config, double quad_phase);

// Variance of the conditional homodyne distribution along x_phi (two-mode:
// variance of the Bell variable per axis).
double variance(const ExperimentConfig& config, double quad_phase);

// Variance of the un-subtracted reference state: squeezed vacuum
// (1-lambda)/(2(1+lambda)), optionally attenuated by the path transmittance;
// two-mode Bell variables carry exactly twice the single-mode value.
double reference_variance(double lambda, Scheme scheme, bool apply_loss,
                          double path_transmittance);

// Wigner function of the single-mode conditional state as a signed 2-D
// mixture, and its pointwise value.
SignedGaussianMixture wigner_mixture(const ExperimentConfig& config);
double wigner_single(const ExperimentConfig& config, double x, double p);

// Mean photon number of the single-mode conditional state, ideal setup only.
double mean_photon_single_ideal(const ExperimentConfig& config);

// x-quadrature pdf of the input squeezed vacuum (reference curve).
double squeezed_vacuum_pdf(double lambda, double x);

// Vacuum quadrature variance per scheme: 1/2, or 1 for Bell variables.
double shot_noise(Scheme scheme);

// -10 log10(v / shot_noise)
double squeezing_gain_db(double variance_value, Scheme scheme);

}  // namespace nongauss
