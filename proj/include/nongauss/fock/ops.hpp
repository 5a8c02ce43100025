#pragma once

#include <utility>

#include "nongauss/experiment.hpp"
#include "nongauss/fock/state.hpp"

namespace nongauss::fock {

FockStateVector vacuum_state(const std::vector<int>& dims);

// S(r)|0> with S(r) = exp[-(r/2)(a^dag^2 - a^2)] and lambda = tanh r.
// Even-photon amplitudes only; squeezed along x for lambda > 0. Negative
// lambda squeezes along p. Throws CutoffTooSmall when the neglected mass
// exceeds tail_bound.
FockStateVector squeezed_vacuum_state(double lambda, FockCutoff cutoff,
                                      double tail_bound = 1e-10);

FockStateVector tensor_product(const FockStateVector& a, const FockStateVector& b);

DensityOperator to_density(const FockStateVector& psi);

// exp[theta(a^dag b - a b^dag)] on the fixed-total-photon sector with
// `total_photons` quanta; basis index = photon number of mode a.
Eigen::MatrixXd beam_splitter_sector(int total_photons, double theta);

FockStateVector beam_splitter(const FockStateVector& psi, int mode_a, int mode_b,
                              double theta);
DensityOperator beam_splitter(const DensityOperator& rho, int mode_a, int mode_b,
                              double theta);

// Diagonal POVM element over photon number of one mode.
struct DiagonalPOVM {
    Eigen::VectorXd weights;
};

// off_n = e^{-nu} (1-eta)^n, on = 1 - off.
std::pair<DiagonalPOVM, DiagonalPOVM> on_off_povm(const DetectorModel& detector,
                                                  FockCutoff cutoff);

// Tap `mode` with a beam splitter of the given transmittance and weight the
// subtracted count c by count_weights[c]:
//   rho -> sum_c count_weights[c] M_c rho M_c^dag,  M_c = <c|V(theta)|0>.
// All-ones weights give the trace-preserving attenuation (loss) channel.
DensityOperator tap_and_weight(const DensityOperator& rho, int mode,
                               double transmittance,
                               const Eigen::VectorXd& count_weights);

// Linear-loss channel of the given transmittance on one mode.
DensityOperator attenuate(const DensityOperator& rho, int mode, double transmittance);

// Conjugation by D((x_s + i p_s)/sqrt(2)): shifts <x> by x_s and <p> by p_s.
// Throws CutoffTooSmall when the displaced state occupies the top Fock level
// beyond tail_bound.
DensityOperator displace(const DensityOperator& rho, int mode, double x_s, double p_s,
                         double tail_bound = 1e-8);

DensityOperator partial_trace_keep(const DensityOperator& rho,
                                   const std::vector<int>& keep_modes);

// Tr[rho n_mode]
double mean_photon(const DensityOperator& rho, int mode);

// <0| Tr_rest rho |0> of one mode.
double vacuum_overlap(const DensityOperator& rho, int mode);

Mat annihilation_matrix(int dim);

// x_phi = (a e^{-i phi} + a^dag e^{i phi}) / sqrt(2)
Mat quadrature_matrix(int dim, double quad_phase);

}  // namespace nongauss::fock
