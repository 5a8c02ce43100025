#include "nongauss/dense_coding.hpp"

#include <cmath>

#include "nongauss/closed_form.hpp"
#include "nongauss/detail/terms.hpp"

namespace nongauss {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Channel values by error pattern: f[dx][dy] with dx = m xor k, dy = n xor l.
// Each entry is the quadrant integral of the signed Bell mixture displaced by
// the sent symbol, which reduces to the erf products below; the component
// masses carry the alternating signs and dark-count weights, so rows sum to
// one by the mass identity.
Eigen::Matrix4d matrix_from_error_table(const double f[2][2]) {
    Eigen::Matrix4d m;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int mm = 0; mm < 2; ++mm)
                for (int n = 0; n < 2; ++n) m(2 * k + l, 2 * mm + n) = f[mm ^ k][n ^ l];
    return m;
}

}  // namespace

double erf(double x) {
    // std::erf is within 1 ulp on this platform, well inside the 1e-12
    // accuracy contract (checked against a series oracle in the tests).
    return std::erf(x);
}

OmegaTable omega_table(const ExperimentConfig& config) {
    require(config.scheme == Scheme::TwoMode, "omega table is defined for the two-mode scheme");
    config.validate();
    const auto terms = detail::component_terms(config);

    OmegaTable table;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const auto& c = terms[2 * i + j];
            table.value[i][j] = std::sqrt(c.big_e / c.big_d);
        }
    return table;
}

void ChannelMatrix::validate(double tol) const {
    for (int a = 0; a < 4; ++a) {
        double row = 0.0;
        for (int b = 0; b < 4; ++b) {
            const double v = p(a, b);
            if (!(v >= -tol && v <= 1.0 + tol)) {
                throw InvalidDistribution("channel entry out of [0, 1]");
            }
            row += v;
        }
        if (std::abs(row - 1.0) > tol) {
            throw InvalidDistribution("channel row does not sum to 1");
        }
    }
}

ChannelMatrix channel_matrix(const ExperimentConfig& config, const SignalAlphabet& alphabet) {
    require(config.scheme == Scheme::TwoMode, "dense coding uses the two-mode scheme");
    require(alphabet.alpha >= 0.0, "alpha must be >= 0");
    const double p_det = detection_probability(config);
    if (p_det <= 0.0) {
        throw DegenerateConditioning("detection probability is zero; no conditional state");
    }

    const double lambda = config.squeezing.lambda;
    const double one_m_l2 = 1.0 - lambda * lambda;
    const auto terms = detail::component_terms(config);
    const OmegaTable omega = omega_table(config);

    double f[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto& c = terms[2 * i + j];
            const double mass = c.weight * one_m_l2 / c.big_e / p_det;
            const double e = erf(omega.value[i][j] * alphabet.alpha);
            const double q[2] = {(1.0 + e) / 2.0, (1.0 - e) / 2.0};
            for (int dx = 0; dx < 2; ++dx)
                for (int dy = 0; dy < 2; ++dy) f[dx][dy] += mass * q[dx] * q[dy];
        }
    }

    ChannelMatrix out;
    out.p = matrix_from_error_table(f);
    return out;
}

ChannelMatrix reference_channel_matrix(double lambda, const SignalAlphabet& alphabet,
                                       bool apply_loss, double path_transmittance) {
    require(lambda >= 0.0 && lambda < 1.0, "lambda must be in [0, 1)");
    const double var = reference_variance(lambda, Scheme::TwoMode, apply_loss,
                                          path_transmittance);
    const double e = erf(alphabet.alpha / std::sqrt(var));
    const double q[2] = {(1.0 + e) / 2.0, (1.0 - e) / 2.0};

    double f[2][2];
    for (int dx = 0; dx < 2; ++dx)
        for (int dy = 0; dy < 2; ++dy) f[dx][dy] = q[dx] * q[dy];

    ChannelMatrix out;
    out.p = matrix_from_error_table(f);
    return out;
}

double mutual_information(const ChannelMatrix& matrix, const Eigen::Vector4d& priors) {
    matrix.validate(1e-9);
    if (std::abs(priors.sum() - 1.0) > 1e-9 || priors.minCoeff() < -1e-15) {
        throw InvalidDistribution("priors must be a probability vector");
    }

    Eigen::Vector4d marginal = Eigen::Vector4d::Zero();
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a) marginal(b) += priors(a) * matrix.p(a, b);

    double info = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double joint = priors(a) * matrix.p(a, b);
            if (joint <= 0.0 || marginal(b) <= 0.0) continue;  // 0 log 0 = 0
            info += joint * std::log2(matrix.p(a, b) / marginal(b));
        }
    }
    return info;
}

}  // namespace nongauss
