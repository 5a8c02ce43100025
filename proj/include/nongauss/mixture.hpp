#pragma once

#include <array>
#include <optional>

namespace nongauss {

// Quadrature-space sample point x_phi.
struct QuadraturePoint {
    double x = 0.0;
    double quad_phase = 0.0;
};

// Phase-space sample point (x, p).
struct PhasePoint {
    double x = 0.0;
    double p = 0.0;
};

// One Gaussian component: weight * amplitude * exp(-coeff_x x^2 [- coeff_p p^2]).
// The weight carries the sign (-1)^{i+j} and the dark-count factors e^{-nu};
// the amplitude is the positive prefactor without the normalization divisor.
struct MixtureComponent {
    double weight = 0.0;
    double amplitude = 0.0;
    double coeff_x = 0.0;
    std::optional<double> coeff_p;  // absent for 1-D mixtures
};

// The universal conditional-statistics shape: four signed Gaussian terms
// indexed (i,j) in {0,1}^2, divided by the detection probability.
struct SignedGaussianMixture {
    std::array<MixtureComponent, 4> components;
    double normalization = 1.0;  // detection probability used as divisor

    bool two_dimensional() const { return components[0].coeff_p.has_value(); }
};

double pdf_at(const SignedGaussianMixture& mixture, double x);
double pdf_at(const SignedGaussianMixture& mixture, double x, double p);
double pdf_at(const SignedGaussianMixture& mixture, const QuadraturePoint& point);
double pdf_at(const SignedGaussianMixture& mixture, const PhasePoint& point);

// Analytic integral of one weighted component (normalization not applied).
double component_mass(const MixtureComponent& component);

// Sum of weighted component masses over the normalization; equals 1 for
// every valid mixture.
double mixture_mass(const SignedGaussianMixture& mixture);

// Second moment along x. All components are centered, so this is the
// variance of the distribution.
double second_moment_x(const SignedGaussianMixture& mixture);

// Integrate a 2-D mixture over p, producing the 1-D marginal mixture in x.
SignedGaussianMixture marginal_x(const SignedGaussianMixture& mixture);

}  // namespace nongauss
