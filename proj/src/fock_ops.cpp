#include "nongauss/fock/ops.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace nongauss::fock {

namespace {

constexpr Complex kI(0.0, 1.0);

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_mode_pair(const std::vector<int>& dims, int mode_a, int mode_b) {
    require(mode_a != mode_b, "beam splitter needs two distinct modes");
    require(mode_a >= 0 && mode_a < static_cast<int>(dims.size()), "mode_a out of range");
    require(mode_b >= 0 && mode_b < static_cast<int>(dims.size()), "mode_b out of range");
}

// Flat offsets of all configurations with n_a = n_b = 0 (the other modes'
// odometer), for the given excluded pair.
std::vector<long> rest_offsets(const std::vector<int>& dims, int mode_a, int mode_b) {
    const auto strides = mode_strides(dims);
    std::vector<long> offsets{0};
    for (int m = 0; m < static_cast<int>(dims.size()); ++m) {
        if (m == mode_a || m == mode_b) continue;
        std::vector<long> next;
        next.reserve(offsets.size() * dims[m]);
        for (long base : offsets)
            for (int n = 0; n < dims[m]; ++n) next.push_back(base + n * strides[m]);
        offsets = std::move(next);
    }
    return offsets;
}

std::vector<Eigen::MatrixXd> all_sectors(int max_total, double theta) {
    std::vector<Eigen::MatrixXd> sectors;
    sectors.reserve(max_total + 1);
    for (int total = 0; total <= max_total; ++total) {
        sectors.push_back(beam_splitter_sector(total, theta));
    }
    return sectors;
}

// U acting on the (mode_a, mode_b) pair of every column of m, in place.
void apply_bs_to_columns(Mat& m, const std::vector<int>& dims, int mode_a, int mode_b,
                         const std::vector<Eigen::MatrixXd>& sectors) {
    const auto strides = mode_strides(dims);
    const long sa = strides[mode_a];
    const long sb = strides[mode_b];
    const int da = dims[mode_a];
    const int db = dims[mode_b];
    const auto rests = rest_offsets(dims, mode_a, mode_b);

    std::vector<long> idx;
    for (long base : rests) {
        for (int total = 1; total <= da - 1 + db - 1; ++total) {
            const int k_min = std::max(0, total - (db - 1));
            const int k_max = std::min(total, da - 1);
            const int len = k_max - k_min + 1;
            idx.resize(len);
            for (int k = 0; k < len; ++k) {
                const int na = k_min + k;
                idx[k] = base + na * sa + static_cast<long>(total - na) * sb;
            }
            const Eigen::MatrixXd sub =
                sectors[total].block(k_min, k_min, len, len);
            const Mat rows = m(idx, Eigen::all);
            const Mat transformed = sub * rows;
            m(idx, Eigen::all) = transformed;
        }
    }
}

// M (arbitrary single-mode matrix) acting on `mode` of every column, in place.
void apply_mode_matrix_to_columns(Mat& m, const std::vector<int>& dims, int mode,
                                  const Mat& op) {
    const auto strides = mode_strides(dims);
    const long s = strides[mode];
    const int d = dims[mode];
    long dim = 1;
    for (int dd : dims) dim *= dd;
    const long hi_count = dim / (static_cast<long>(d) * s);

    for (long hi = 0; hi < hi_count; ++hi) {
        for (long lo = 0; lo < s; ++lo) {
            const long start = hi * d * s + lo;
            const Mat gathered = m(Eigen::seqN(start, d, s), Eigen::all);
            const Mat transformed = op * gathered;
            m(Eigen::seqN(start, d, s), Eigen::all) = transformed;
        }
    }
}

// sqrt(binom(n, c) tau^{n-c} (1-tau)^c): magnitude of <n-c, c|V|n, 0>. The
// (-1)^c phase cancels inside M_c rho M_c^dag and is dropped.
Eigen::MatrixXd tap_band_coefficients(int dim, double tau) {
    Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(dim, dim);  // (n, c)
    for (int c = 0; c < dim; ++c) {
        double binom = 1.0;
        for (int n = c; n < dim; ++n) {
            if (n > c) binom *= static_cast<double>(n) / (n - c);
            coef(n, c) = std::sqrt(binom * std::pow(tau, n - c) * std::pow(1.0 - tau, c));
        }
    }
    return coef;
}

}  // namespace

FockStateVector vacuum_state(const std::vector<int>& dims) {
    FockStateVector psi;
    psi.dims = dims;
    long dim = 1;
    for (int d : dims) dim *= d;
    psi.amp = Vec::Zero(dim);
    psi.amp(0) = 1.0;
    return psi;
}

FockStateVector squeezed_vacuum_state(double lambda, FockCutoff cutoff, double tail_bound) {
    require(std::abs(lambda) < 1.0, "|lambda| must be < 1");
    require_cutoff(lambda, cutoff, tail_bound);

    FockStateVector psi;
    psi.dims = {cutoff.dim()};
    psi.amp = Vec::Zero(cutoff.dim());
    double c = std::sqrt(std::sqrt(1.0 - lambda * lambda));
    psi.amp(0) = c;
    for (int n = 1; 2 * n <= cutoff.n_max; ++n) {
        c *= -lambda * std::sqrt((2.0 * n - 1.0) / (2.0 * n));
        psi.amp(2 * n) = c;
    }
    return psi;
}

FockStateVector tensor_product(const FockStateVector& a, const FockStateVector& b) {
    FockStateVector out;
    out.dims = a.dims;
    out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
    out.amp = Vec(a.size() * b.size());
    for (long i = 0; i < a.size(); ++i) {
        out.amp.segment(i * b.size(), b.size()) = a.amp(i) * b.amp;
    }
    return out;
}

DensityOperator to_density(const FockStateVector& psi) {
    DensityOperator rho;
    rho.dims = psi.dims;
    rho.rho = psi.amp * psi.amp.adjoint();
    return rho;
}

Eigen::MatrixXd beam_splitter_sector(int total_photons, double theta) {
    const int d = total_photons + 1;
    if (d == 1) return Eigen::MatrixXd::Ones(1, 1);

    // H = i(a^dag b - a b^dag) on the sector is Hermitian; U = exp(-i theta H)
    // is exactly unitary, which keeps the sector invariant sharp.
    Mat h = Mat::Zero(d, d);
    for (int k = 0; k + 1 <= total_photons; ++k) {
        const double g = std::sqrt(static_cast<double>(k + 1) *
                                   static_cast<double>(total_photons - k));
        h(k + 1, k) = kI * g;
        h(k, k + 1) = -kI * g;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Vec phases(d);
    for (int k = 0; k < d; ++k) phases(k) = std::exp(-kI * theta * es.eigenvalues()(k));
    const Mat u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return u.real();
}

FockStateVector beam_splitter(const FockStateVector& psi, int mode_a, int mode_b,
                              double theta) {
    require_mode_pair(psi.dims, mode_a, mode_b);
    const auto sectors = all_sectors(psi.dims[mode_a] - 1 + psi.dims[mode_b] - 1, theta);
    FockStateVector out = psi;
    Mat column = out.amp;
    apply_bs_to_columns(column, psi.dims, mode_a, mode_b, sectors);
    out.amp = column;
    return out;
}

DensityOperator beam_splitter(const DensityOperator& rho, int mode_a, int mode_b,
                              double theta) {
    require_mode_pair(rho.dims, mode_a, mode_b);
    const auto sectors = all_sectors(rho.dims[mode_a] - 1 + rho.dims[mode_b] - 1, theta);
    DensityOperator out;
    out.dims = rho.dims;
    out.rho = rho.rho;
    // U rho U^dag: transform columns, adjoint, transform columns, adjoint.
    apply_bs_to_columns(out.rho, rho.dims, mode_a, mode_b, sectors);
    out.rho.adjointInPlace();
    apply_bs_to_columns(out.rho, rho.dims, mode_a, mode_b, sectors);
    out.rho.adjointInPlace();
    return out;
}

std::pair<DiagonalPOVM, DiagonalPOVM> on_off_povm(const DetectorModel& detector,
                                                  FockCutoff cutoff) {
    DiagonalPOVM off, on;
    off.weights.resize(cutoff.dim());
    on.weights.resize(cutoff.dim());
    for (int n = 0; n < cutoff.dim(); ++n) {
        off.weights(n) = std::exp(-detector.dark_mean) *
                         std::pow(1.0 - detector.efficiency, n);
        on.weights(n) = 1.0 - off.weights(n);
    }
    return {off, on};
}

DensityOperator tap_and_weight(const DensityOperator& rho, int mode, double transmittance,
                               const Eigen::VectorXd& count_weights) {
    require(mode >= 0 && mode < rho.mode_count(), "mode out of range");
    require(transmittance > 0.0 && transmittance <= 1.0, "transmittance must be in (0, 1]");
    const int d = rho.dims[mode];
    require(count_weights.size() >= d, "need a weight per possible count");

    const auto strides = mode_strides(rho.dims);
    const long s = strides[mode];
    const auto occ = mode_occupation(rho.dims, mode);
    const long dim = rho.rho.rows();
    const Eigen::MatrixXd coef = tap_band_coefficients(d, transmittance);

    DensityOperator out;
    out.dims = rho.dims;
    out.rho = Mat::Zero(dim, dim);
    for (int c = 0; c < d; ++c) {
        const double wc = count_weights(c);
        if (wc == 0.0) continue;
        const long shift = static_cast<long>(c) * s;
        for (long q = 0; q < dim; ++q) {
            const int nq = occ[q];
            if (nq < c) continue;
            const double scale_q = wc * coef(nq, c);
            const auto src = rho.rho.col(q);
            auto dst = out.rho.col(q - shift);
            for (long r = 0; r < dim; ++r) {
                const int nr = occ[r];
                if (nr < c) continue;
                dst(r - shift) += scale_q * coef(nr, c) * src(r);
            }
        }
    }
    return out;
}

DensityOperator attenuate(const DensityOperator& rho, int mode, double transmittance) {
    if (transmittance == 1.0) return rho;
    return tap_and_weight(rho, mode, transmittance,
                          Eigen::VectorXd::Ones(rho.dims[mode]));
}

DensityOperator displace(const DensityOperator& rho, int mode, double x_s, double p_s,
                         double tail_bound) {
    require(mode >= 0 && mode < rho.mode_count(), "mode out of range");
    const int d = rho.dims[mode];
    const Complex beta((x_s) / std::sqrt(2.0), (p_s) / std::sqrt(2.0));

    const Mat a = annihilation_matrix(d);
    const Mat k = beta * a.adjoint() - std::conj(beta) * a;
    Eigen::SelfAdjointEigenSolver<Mat> es(kI * k);
    Vec phases(d);
    for (int n = 0; n < d; ++n) phases(n) = std::exp(-kI * es.eigenvalues()(n));
    const Mat u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

    DensityOperator out;
    out.dims = rho.dims;
    out.rho = rho.rho;
    apply_mode_matrix_to_columns(out.rho, rho.dims, mode, u);
    out.rho.adjointInPlace();
    apply_mode_matrix_to_columns(out.rho, rho.dims, mode, u);
    out.rho.adjointInPlace();

    // Occupancy of the top Fock level signals a clipped displacement.
    const auto occ = mode_occupation(rho.dims, mode);
    double top_mass = 0.0;
    for (long r = 0; r < out.rho.rows(); ++r) {
        if (occ[r] == d - 1) top_mass += out.rho(r, r).real();
    }
    if (top_mass > tail_bound) {
        throw CutoffTooSmall("displaced state reaches the Fock cutoff");
    }
    return out;
}

DensityOperator partial_trace_keep(const DensityOperator& rho,
                                   const std::vector<int>& keep_modes) {
    const auto strides = mode_strides(rho.dims);
    std::vector<int> traced;
    for (int m = 0; m < rho.mode_count(); ++m) {
        if (std::find(keep_modes.begin(), keep_modes.end(), m) == keep_modes.end()) {
            traced.push_back(m);
        }
    }

    std::vector<int> out_dims;
    for (int m : keep_modes) out_dims.push_back(rho.dims[m]);
    long out_dim = 1;
    for (int d : out_dims) out_dim *= d;

    // Offsets of kept-index combinations in the original flat index.
    std::vector<long> keep_offsets{0};
    for (size_t i = 0; i < keep_modes.size(); ++i) {
        std::vector<long> next;
        next.reserve(keep_offsets.size() * out_dims[i]);
        for (long base : keep_offsets)
            for (int n = 0; n < out_dims[i]; ++n)
                next.push_back(base + n * strides[keep_modes[i]]);
        keep_offsets = std::move(next);
    }
    std::vector<long> trace_offsets{0};
    for (int m : traced) {
        std::vector<long> next;
        next.reserve(trace_offsets.size() * rho.dims[m]);
        for (long base : trace_offsets)
            for (int n = 0; n < rho.dims[m]; ++n) next.push_back(base + n * strides[m]);
        trace_offsets = std::move(next);
    }

    DensityOperator out;
    out.dims = out_dims;
    out.rho = Mat::Zero(out_dim, out_dim);
    for (long r = 0; r < out_dim; ++r) {
        for (long q = 0; q < out_dim; ++q) {
            Complex sum = 0.0;
            for (long t : trace_offsets) {
                sum += rho.rho(keep_offsets[r] + t, keep_offsets[q] + t);
            }
            out.rho(r, q) = sum;
        }
    }
    return out;
}

double mean_photon(const DensityOperator& rho, int mode) {
    const auto occ = mode_occupation(rho.dims, mode);
    double n_bar = 0.0;
    for (long r = 0; r < rho.rho.rows(); ++r) n_bar += occ[r] * rho.rho(r, r).real();
    return n_bar;
}

double vacuum_overlap(const DensityOperator& rho, int mode) {
    const auto occ = mode_occupation(rho.dims, mode);
    double overlap = 0.0;
    for (long r = 0; r < rho.rho.rows(); ++r) {
        if (occ[r] == 0) overlap += rho.rho(r, r).real();
    }
    return overlap;
}

Mat annihilation_matrix(int dim) {
    Mat a = Mat::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Mat quadrature_matrix(int dim, double quad_phase) {
    const Mat a = annihilation_matrix(dim);
    const Complex phase = std::exp(kI * quad_phase);
    return (a * std::conj(phase) + a.adjoint() * phase) / std::sqrt(2.0);
}

}  // namespace nongauss::fock
