#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nongauss/errors.hpp"

namespace nongauss::fock {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Per-mode truncation: photon numbers 0..n_max are kept.
struct FockCutoff {
    int n_max = 20;

    int dim() const { return n_max + 1; }
};

// Squeezed-vacuum probability mass above the cutoff (exact, via the norm
// identity of the even-photon amplitudes).
double squeezed_tail_mass(double lambda, int n_max);

// Throws CutoffTooSmall when the neglected squeezed-vacuum mass exceeds
// `bound` for this lambda.
void require_cutoff(double lambda, FockCutoff cutoff, double bound = 1e-10);

// Pure state over the tensor-product Fock basis; mode 0 varies slowest.
struct FockStateVector {
    std::vector<int> dims;
    Vec amp;

    int mode_count() const { return static_cast<int>(dims.size()); }
    long size() const { return amp.size(); }
    double norm() const { return amp.norm(); }
};

// Density operator over the same basis.
struct DensityOperator {
    std::vector<int> dims;
    Mat rho;

    int mode_count() const { return static_cast<int>(dims.size()); }
    double trace() const { return rho.trace().real(); }
};

// Flat-index strides (mode 0 slowest).
std::vector<long> mode_strides(const std::vector<int>& dims);

// Photon number of `mode` for every flat index.
std::vector<int> mode_occupation(const std::vector<int>& dims, int mode);

}  // namespace nongauss::fock
