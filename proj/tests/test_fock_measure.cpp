#include <doctest.h>

#include <cmath>

#include "nongauss/fock/measure.hpp"
#include "nongauss/fock/network.hpp"
#include "nongauss/fock/ops.hpp"
#include "nongauss/quadrature.hpp"

using namespace nongauss;
using namespace nongauss::fock;

TEST_CASE("hermite functions") {
    CHECK(hermite_functions(0, 0.0)(0) == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-15));
    SUBCASE("orthonormality under quadrature") {
        const auto inner = [&](int n, int m) {
            return integrate_to_tol(
                [&](double x) {
                    const auto psi = hermite_functions(8, x);
                    return psi(n) * psi(m);
                },
                -10.0, 10.0, 1e-12, 16, 16, 5);
        };
        CHECK(inner(4, 4) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(inner(3, 5) == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(inner(2, 3) == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("quadrature pdf") {
    SUBCASE("vacuum at the origin") {
        const auto vac = to_density(vacuum_state({10}));
        for (double phase : {0.0, 0.7, 2.0}) {
            CHECK(quadrature_pdf(vac, 0, phase, 0.0) ==
                  doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-12));
        }
    }
    SUBCASE("squeezed vacuum variance by numeric moments") {
        const auto rho = to_density(squeezed_vacuum_state(0.5, FockCutoff{40}));
        const double m2 = integrate_to_tol(
            [&](double x) { return x * x * quadrature_pdf_single(rho.rho, 0.0, x); }, -12.0,
            12.0, 1e-11, 16, 16, 6);
        CHECK(m2 == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    }
    SUBCASE("pdf integrates to one") {
        const auto rho = to_density(squeezed_vacuum_state(0.45, FockCutoff{36}));
        const double mass = integrate_to_tol(
            [&](double x) { return quadrature_pdf_single(rho.rho, 0.8, x); }, -12.0, 12.0,
            1e-11, 16, 16, 6);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("wigner transform") {
    SUBCASE("vacuum value at the origin") {
        const auto vac = to_density(vacuum_state({12}));
        CHECK(wigner(vac, 0.0, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-10));
    }
    SUBCASE("one-photon negativity at the origin") {
        DensityOperator one;
        one.dims = {12};
        one.rho = Mat::Zero(13, 13);
        one.rho(1, 1) = 1.0;
        CHECK(wigner(one, 0.0, 0.0) == doctest::Approx(-1.0 / M_PI).epsilon(1e-10));
    }
    SUBCASE("plane integral and marginal identity") {
        const auto rho = to_density(squeezed_vacuum_state(0.3, FockCutoff{20}));
        // fixed tensor Gauss-Legendre grid; the integrand is a smooth
        // Gaussian-like surface of width O(1)
        const GaussLegendre rule(10);
        const int panels = 6;
        const double width = 5.0;
        double integral = 0.0;
        for (int px = 0; px < panels; ++px) {
            const double lox = -width + 2.0 * width * px / panels;
            const double hx = 2.0 * width / panels;
            for (int ix = 0; ix < 10; ++ix) {
                const double x = lox + 0.5 * hx * (1.0 + rule.nodes(ix));
                for (int pp = 0; pp < panels; ++pp) {
                    const double lop = -width + 2.0 * width * pp / panels;
                    for (int ip = 0; ip < 10; ++ip) {
                        const double p = lop + 0.5 * hx * (1.0 + rule.nodes(ip));
                        integral += 0.25 * hx * hx * rule.weights(ix) * rule.weights(ip) *
                                    wigner(rho, x, p);
                    }
                }
            }
        }
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));

        for (double x : {0.0, 0.8}) {
            const double marginal = integrate_to_tol(
                [&](double p) { return wigner(rho, x, p); }, -7.0, 7.0, 1e-10, 16, 16, 3);
            CHECK(marginal ==
                  doctest::Approx(quadrature_pdf(rho, 0, 0.0, x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("bell measurement") {
    SUBCASE("two-mode squeezed vacuum is isotropic with variance (1-l)/(1+l)") {
        const double lambda = 0.5;
        auto psi = tensor_product(squeezed_vacuum_state(lambda, FockCutoff{32}),
                                  squeezed_vacuum_state(-lambda, FockCutoff{32}));
        psi = beam_splitter(psi, 0, 1, M_PI / 4.0);
        const auto rho = to_density(psi);

        // numeric moments on a Gauss-Legendre tensor grid
        const GaussLegendre rule(24);
        const int panels = 8;
        const double width = 8.0;
        std::vector<double> nodes, weights;
        for (int p = 0; p < panels; ++p) {
            const double lo = -width + 2.0 * width * p / panels;
            const double h = 2.0 * width / panels;
            for (int k = 0; k < 24; ++k) {
                nodes.push_back(lo + 0.5 * h * (1.0 + rule.nodes(k)));
                weights.push_back(0.5 * h * rule.weights(k));
            }
        }
        Eigen::VectorXd xv = Eigen::Map<Eigen::VectorXd>(nodes.data(), nodes.size());
        const Eigen::MatrixXd pdf = bell_pdf_grid(rho, xv, xv);
        double mass = 0.0, m2x = 0.0, m2p = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            for (size_t j = 0; j < nodes.size(); ++j) {
                const double w = weights[i] * weights[j] * pdf(i, j);
                mass += w;
                m2x += nodes[i] * nodes[i] * w;
                m2p += nodes[j] * nodes[j] * w;
            }
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(m2x == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
        CHECK(m2p == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
        CHECK(bell_variance_x(rho) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
    SUBCASE("grid evaluation agrees with the scalar path") {
        auto psi = tensor_product(squeezed_vacuum_state(0.3, FockCutoff{20}),
                                  squeezed_vacuum_state(-0.3, FockCutoff{20}));
        psi = beam_splitter(psi, 0, 1, M_PI / 4.0);
        const auto rho = to_density(psi);
        Eigen::VectorXd pts(3);
        pts << -1.0, 0.2, 1.4;
        const auto grid = bell_pdf_grid(rho, pts, pts);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(grid(i, j) == doctest::Approx(bell_pdf(rho, pts(i), pts(j))).epsilon(1e-12));
    }
    SUBCASE("displacement translates the Bell pdf") {
        const auto config = ExperimentConfig::ideal(0.3, 0.9, Scheme::TwoMode);
        const auto cs = conditional_state(config, FockCutoff{32});
        const auto moved = displace(cs.rho, 0, 0.8, -0.5);
        for (const auto& [x, p] : {std::pair{1.0, 0.2}, {0.0, 0.0}, {-0.7, 1.1}}) {
            CHECK(bell_pdf(moved, x, p) ==
                  doctest::Approx(bell_pdf(cs.rho, x - 0.8, p + 0.5)).epsilon(1e-8));
        }
    }
}

TEST_CASE("trace distance") {
    Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3);
    a(0, 0) = 1.0;
    b(1, 1) = 1.0;
    CHECK(trace_distance(a, a) == doctest::Approx(0.0));
    CHECK(trace_distance(a, b) == doctest::Approx(1.0).epsilon(1e-12));
}
