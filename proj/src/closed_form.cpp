#include "nongauss/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "nongauss/detail/terms.hpp"

namespace nongauss {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

using detail::ComponentTerms;
using detail::component_terms;
using detail::dark_weight;

}  // namespace

std::string to_string(Scheme scheme) {
    return scheme == Scheme::SingleMode ? "single" : "two";
}

void ExperimentConfig::validate() const {
    require(squeezing.lambda >= 0.0 && squeezing.lambda < 1.0, "lambda must be in [0, 1)");
    require(setup.tap_transmittance > 0.0 && setup.tap_transmittance < 1.0,
            "tap transmittance must be in (0, 1)");
    require(setup.path_transmittance > 0.0 && setup.path_transmittance <= 1.0,
            "path transmittance must be in (0, 1]");
    require(detector.efficiency > 0.0 && detector.efficiency <= 1.0,
            "detector efficiency must be in (0, 1]");
    require(detector.dark_mean >= 0.0, "dark count mean must be >= 0");
}

ExperimentConfig ExperimentConfig::ideal(double lambda, double tap_transmittance,
                                         Scheme scheme) {
    ExperimentConfig config;
    config.squeezing.lambda = lambda;
    config.setup.tap_transmittance = tap_transmittance;
    config.scheme = scheme;
    config.validate();
    return config;
}

ExperimentConfig ExperimentConfig::practical(double lambda, double tap_transmittance,
                                             double path_transmittance, double efficiency,
                                             double dark_mean, Scheme scheme) {
    ExperimentConfig config;
    config.squeezing.lambda = lambda;
    config.setup.tap_transmittance = tap_transmittance;
    config.setup.path_transmittance = path_transmittance;
    config.detector.efficiency = efficiency;
    config.detector.dark_mean = dark_mean;
    config.scheme = scheme;
    config.validate();
    return config;
}

double normalize_phase(double phase) {
    const double two_pi = 2.0 * kPi;
    double reduced = std::fmod(phase, two_pi);
    if (reduced < 0.0) reduced += two_pi;
    return reduced;
}

GammaTable gamma_table(const ExperimentConfig& config) {
    config.validate();
    const double t_l = config.setup.path_transmittance;
    const double r = config.setup.tap_reflectance();
    const double eta = config.detector.efficiency;

    GammaTable table;
    table.scheme = config.scheme;
    table.single[1][1] = t_l * r;
    table.single[1][0] = (2.0 - eta) * t_l * r / 2.0;
    table.single[0][1] = table.single[1][0];
    table.single[0][0] = (1.0 - eta) * t_l * r;
    table.two[1] = t_l * r;
    table.two[0] = (1.0 - eta) * t_l * r;
    return table;
}

double detection_probability(const ExperimentConfig& config) {
    config.validate();
    const double lambda = config.squeezing.lambda;
    const double one_m_l2 = 1.0 - lambda * lambda;
    const auto terms = component_terms(config);

    double p = 0.0;
    for (const ComponentTerms& c : terms) {
        const double mass = one_m_l2 / c.big_e;
        p += c.weight * (config.scheme == Scheme::SingleMode ? std::sqrt(mass) : mass);
    }
    // The alternating sum cancels to zero in exact arithmetic at lambda = 0,
    // nu = 0; clamp the rounding residue.
    return std::max(p, 0.0);
}

SignedGaussianMixture homodyne_mixture(const ExperimentConfig& config, double quad_phase) {
    const double p_det = detection_probability(config);
    if (p_det <= 0.0) {
        throw DegenerateConditioning("detection probability is zero; no conditional state");
    }

    const double lambda = config.squeezing.lambda;
    const double one_m_l2 = 1.0 - lambda * lambda;
    const double t = config.setup.path_transmittance * config.setup.tap_transmittance;
    const double sin_phi = std::sin(quad_phase);
    const double phase_term = 4.0 * lambda * t * sin_phi * sin_phi;
    const auto terms = component_terms(config);

    SignedGaussianMixture mixture;
    mixture.normalization = p_det;
    for (int k = 0; k < 4; ++k) {
        const ComponentTerms& c = terms[k];
        MixtureComponent& out = mixture.components[k];
        out.weight = c.weight;
        if (config.scheme == Scheme::SingleMode) {
            const double d = c.big_d + phase_term;
            if (d <= 1e-14) {
                throw DegenerateConditioning("mixture component is numerically degenerate");
            }
            out.amplitude = std::sqrt(one_m_l2 / d) / std::sqrt(kPi);
            out.coeff_x = c.big_e / d;
        } else {
            const double d = c.big_d;
            if (d <= 1e-14) {
                throw DegenerateConditioning("mixture component is numerically degenerate");
            }
            out.amplitude = one_m_l2 / d / (2.0 * kPi);
            out.coeff_x = c.big_e / (2.0 * d);
            out.coeff_p = out.coeff_x;
        }
    }
    return mixture;
}

double variance(const ExperimentConfig& config, double quad_phase) {
    return second_moment_x(homodyne_mixture(config, quad_phase));
}

double reference_variance(double lambda, Scheme scheme, bool apply_loss,
                          double path_transmittance) {
    require(lambda >= 0.0 && lambda < 1.0, "lambda must be in [0, 1)");
    double v = (1.0 - lambda) / (2.0 * (1.0 + lambda));
    if (apply_loss) {
        v = path_transmittance * v + (1.0 - path_transmittance) / 2.0;
    }
    return scheme == Scheme::TwoMode ? 2.0 * v : v;
}

SignedGaussianMixture wigner_mixture(const ExperimentConfig& config) {
    require(config.scheme == Scheme::SingleMode, "Wigner function is single-mode only");
    const double p_det = detection_probability(config);
    if (p_det <= 0.0) {
        throw DegenerateConditioning("detection probability is zero; no conditional state");
    }

    const double lambda = config.squeezing.lambda;
    const double one_m_l2 = 1.0 - lambda * lambda;
    const auto terms = component_terms(config);

    SignedGaussianMixture mixture;
    mixture.normalization = p_det;
    for (int k = 0; k < 4; ++k) {
        const ComponentTerms& c = terms[k];
        MixtureComponent& out = mixture.components[k];
        out.weight = c.weight;
        out.amplitude = std::sqrt(one_m_l2 / c.big_f) / kPi;
        out.coeff_x = c.big_e / c.big_d;
        out.coeff_p = c.big_d / c.big_f;
    }
    return mixture;
}

double wigner_single(const ExperimentConfig& config, double x, double p) {
    return pdf_at(wigner_mixture(config), x, p);
}

double mean_photon_single_ideal(const ExperimentConfig& config) {
    require(config.scheme == Scheme::SingleMode, "mean photon closed form is single-mode only");
    if (!config.is_ideal()) {
        throw NotIdeal("no closed form for the mean photon number with imperfections");
    }
    const double lambda = config.squeezing.lambda;
    const double p_det = detection_probability(config);
    if (p_det <= 0.0) {
        throw DegenerateConditioning("detection probability is zero; no conditional state");
    }

    const double big_t = config.setup.tap_transmittance;
    const double one_m_l2 = 1.0 - lambda * lambda;
    const GammaTable gamma = gamma_table(config);

    double n_bar = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double a = big_t + gamma.single[i][j];
            const double e = 1.0 - lambda * lambda * a * a;
            const double n_ij = std::sqrt(one_m_l2 / e) * lambda * lambda * big_t * a / e;
            n_bar += dark_weight(i, j, 0.0) * n_ij;
        }
    }
    return n_bar / p_det;
}

double squeezed_vacuum_pdf(double lambda, double x) {
    const double coeff = (1.0 + lambda) / (1.0 - lambda);  // 1/(2 sigma^2)
    return std::sqrt(coeff / kPi) * std::exp(-coeff * x * x);
}

double shot_noise(Scheme scheme) {
    return scheme == Scheme::TwoMode ? 1.0 : 0.5;
}

double squeezing_gain_db(double variance_value, Scheme scheme) {
    return -10.0 * std::log10(variance_value / shot_noise(scheme));
}

// --- mixture evaluation ---

double pdf_at(const SignedGaussianMixture& mixture, double x) {
    require(!mixture.two_dimensional(), "2-D mixture needs both x and p (or marginal_x)");
    double value = 0.0;
    for (const MixtureComponent& c : mixture.components) {
        value += c.weight * c.amplitude * std::exp(-c.coeff_x * x * x);
    }
    return value / mixture.normalization;
}

double pdf_at(const SignedGaussianMixture& mixture, double x, double p) {
    require(mixture.two_dimensional(), "1-D mixture takes a single coordinate");
    double value = 0.0;
    for (const MixtureComponent& c : mixture.components) {
        value += c.weight * c.amplitude * std::exp(-c.coeff_x * x * x - *c.coeff_p * p * p);
    }
    return value / mixture.normalization;
}

double pdf_at(const SignedGaussianMixture& mixture, const QuadraturePoint& point) {
    return pdf_at(mixture, point.x);
}

double pdf_at(const SignedGaussianMixture& mixture, const PhasePoint& point) {
    return pdf_at(mixture, point.x, point.p);
}

double component_mass(const MixtureComponent& c) {
    double mass = c.weight * c.amplitude * std::sqrt(kPi / c.coeff_x);
    if (c.coeff_p) mass *= std::sqrt(kPi / *c.coeff_p);
    return mass;
}

double mixture_mass(const SignedGaussianMixture& mixture) {
    double total = 0.0;
    for (const MixtureComponent& c : mixture.components) total += component_mass(c);
    return total / mixture.normalization;
}

double second_moment_x(const SignedGaussianMixture& mixture) {
    double total = 0.0;
    for (const MixtureComponent& c : mixture.components) {
        // Int x^2 e^{-c x^2} = sqrt(pi)/2 c^{-3/2}
        double m2 = c.weight * c.amplitude * std::sqrt(kPi) / (2.0 * std::pow(c.coeff_x, 1.5));
        if (c.coeff_p) m2 *= std::sqrt(kPi / *c.coeff_p);
        total += m2;
    }
    return total / mixture.normalization;
}

SignedGaussianMixture marginal_x(const SignedGaussianMixture& mixture) {
    SignedGaussianMixture out = mixture;
    for (MixtureComponent& c : out.components) {
        if (c.coeff_p) {
            c.amplitude *= std::sqrt(kPi / *c.coeff_p);
            c.coeff_p.reset();
        }
    }
    return out;
}

}  // namespace nongauss
