#pragma once

#include "nongauss/dense_coding.hpp"
#include "nongauss/experiment.hpp"
#include "nongauss/fock/state.hpp"

namespace nongauss::fock {

struct ConditionalState {
    DensityOperator rho;  // modes A, B (single-mode scheme: after recombination)
    double probability = 0.0;
};

// Build the full network numerically: squeezers, 50:50 split, per-arm loss
// channels of transmittance T_L, tap beam splitters of transmittance T,
// on(x)on conditioning with the practical POVM, and (single-mode scheme only)
// the final 50:50 recombination. Returns the normalized conditional state and
// the success probability. tail_bound is the admissible truncated
// squeezed-vacuum mass (relaxed only for the heavy lambda = 0.8 checks).
ConditionalState conditional_state(const ExperimentConfig& config, FockCutoff cutoff,
                                   double tail_bound = 1e-10);

// Sequential two-tap cat-like generation on a single squeezed mode: tap A,
// split the tap 50:50, condition on on(x)on. Ideal parameters only; the
// mode-A output matches the interferometric scheme.
ConditionalState dakna_conditional_state(double lambda, double tap_transmittance,
                                         FockCutoff cutoff);

// Quadrant-integration controls for the oracle channel matrix.
struct QuadrantQuadrature {
    double half_width = 12.0;     // integration domain |x|,|p| <= half_width
    int base_panels = 6;          // panels per half-axis at the coarsest level
    int order = 16;               // Gauss-Legendre order per panel
    int max_refinements = 3;      // panel doublings
    double tol = 1e-8;            // successive-estimate agreement
};

// Channel matrix by 2-D Gauss-Legendre integration of the Bell pdf of the
// displaced conditional state over each decision quadrant.
ChannelMatrix channel_matrix_oracle(const ExperimentConfig& config,
                                    const SignalAlphabet& alphabet, FockCutoff cutoff,
                                    const QuadrantQuadrature& quad = {});

// Cross-engine validation report; keys mirror the serialized JSON.
struct OracleReport {
    double pdet_rel_err = 0.0;
    double pdf_max_abs_err = 0.0;
    double variance_abs_err = 0.0;
    double wigner_max_abs_err = 0.0;
    double bell_pdf_max_abs_err = 0.0;
    double channel_matrix_max_abs_err = 0.0;
    double mode_b_vacuum_overlap = 0.0;
    double dakna_trace_distance = 0.0;

    // Tolerances: pdet 1e-6 relative; pdf/variance/wigner/bell/channel 1e-6
    // absolute; ideal runs additionally gate the dakna distance (1e-9) and
    // the mode-B overlap (>= 1 - 1e-8).
    bool pass(bool ideal) const;
};

// Run both schemes of the cross-engine suite at the parameters of `base`
// (its scheme field is ignored). The dakna distance is always evaluated at
// ideal parameters, where the identity is defined.
OracleReport run_oracle_check(const ExperimentConfig& base, FockCutoff cutoff,
                              const QuadrantQuadrature& quad = {});

}  // namespace nongauss::fock
