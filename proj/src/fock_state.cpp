#include "nongauss/fock/state.hpp"

#include <cmath>
#include <sstream>

namespace nongauss::fock {

double squeezed_tail_mass(double lambda, int n_max) {
    // |c_{2n}|^2 sums to 1 exactly, so the tail is 1 minus the kept mass.
    double kept = 0.0;
    double c = std::sqrt(std::sqrt(1.0 - lambda * lambda));  // c_0
    kept += c * c;
    for (int n = 1; 2 * n <= n_max; ++n) {
        c *= -lambda * std::sqrt((2.0 * n - 1.0) / (2.0 * n));
        kept += c * c;
    }
    return std::max(0.0, 1.0 - kept);
}

void require_cutoff(double lambda, FockCutoff cutoff, double bound) {
    if (cutoff.n_max < 2) throw CutoffTooSmall("cutoff must keep at least two photons");
    const double tail = squeezed_tail_mass(std::abs(lambda), cutoff.n_max);
    if (tail >= bound) {
        std::ostringstream msg;
        msg << "cutoff " << cutoff.n_max << " leaves squeezed-vacuum mass " << tail
            << " above bound " << bound << " at lambda " << lambda;
        throw CutoffTooSmall(msg.str());
    }
}

std::vector<long> mode_strides(const std::vector<int>& dims) {
    std::vector<long> strides(dims.size());
    long s = 1;
    for (int m = static_cast<int>(dims.size()) - 1; m >= 0; --m) {
        strides[m] = s;
        s *= dims[m];
    }
    return strides;
}

std::vector<int> mode_occupation(const std::vector<int>& dims, int mode) {
    const auto strides = mode_strides(dims);
    long total = 1;
    for (int d : dims) total *= d;
    std::vector<int> occ(total);
    for (long idx = 0; idx < total; ++idx) {
        occ[idx] = static_cast<int>((idx / strides[mode]) % dims[mode]);
    }
    return occ;
}

}  // namespace nongauss::fock
