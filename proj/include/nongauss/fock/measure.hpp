#pragma once

#include "nongauss/fock/state.hpp"

namespace nongauss::fock {

// Harmonic-oscillator eigenfunctions psi_0..psi_n_max at x:
// psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}.
Eigen::VectorXd hermite_functions(int n_max, double x);

// <x_phi| rho_mode |x_phi> with <n|x_phi> = e^{i n phi} psi_n(x).
double quadrature_pdf(const DensityOperator& rho, int mode, double quad_phase, double x);
double quadrature_pdf_single(const Mat& rho_single, double quad_phase, double x);

// Tr[rho_mode x_phi^2] - Tr[rho_mode x_phi]^2 via operator contraction.
double quadrature_variance(const DensityOperator& rho, int mode, double quad_phase);

// CV Bell measurement pdf of a two-mode state, realized as 50:50
// recombination followed by x-homodyne on port A and p-homodyne on port B;
// variables scaled so that x = x_A - x_B and p = p_A + p_B.
double bell_pdf(const DensityOperator& rho_two_mode, double x, double p);

// Bell pdf on a tensor grid (shared mode-B contraction per p value).
Eigen::MatrixXd bell_pdf_grid(const DensityOperator& rho_two_mode,
                              const Eigen::VectorXd& xs, const Eigen::VectorXd& ps);

// W(x,p) = (1/pi) Int dy e^{-2ipy} <x-y|rho|x+y>, by panel quadrature in y.
double wigner(const DensityOperator& rho_single_mode, double x, double p);

// Bell-variable variance per axis: Var(x_A - x_B) evaluated through the
// recombined ports.
double bell_variance_x(const DensityOperator& rho_two_mode);

// 0.5 * || a - b ||_1 for Hermitian a, b.
double trace_distance(const Mat& a, const Mat& b);

}  // namespace nongauss::fock
