#include <doctest.h>

#include <cmath>
#include <random>

#include "nongauss/fock/measure.hpp"
#include "nongauss/fock/ops.hpp"

using namespace nongauss;
using namespace nongauss::fock;

namespace {

FockStateVector random_state(const std::vector<int>& dims, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    FockStateVector psi = vacuum_state(dims);
    for (long i = 0; i < psi.size(); ++i) psi.amp(i) = Complex(gauss(rng), gauss(rng));
    psi.amp.normalize();
    return psi;
}

// Mass per total-photon sector of a two-mode state.
Eigen::VectorXd sector_masses(const FockStateVector& psi) {
    const int da = psi.dims[0], db = psi.dims[1];
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(da + db - 1);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            mass(a + b) += std::norm(psi.amp(static_cast<long>(a) * db + b));
    return mass;
}

}  // namespace

TEST_CASE("squeezed vacuum state") {
    SUBCASE("lambda = 0 is the vacuum") {
        const auto psi = squeezed_vacuum_state(0.0, FockCutoff{12});
        CHECK(std::abs(psi.amp(0) - 1.0) < 1e-15);
        CHECK(psi.amp.tail(12).norm() == 0.0);
    }
    SUBCASE("only even photon numbers appear") {
        const auto psi = squeezed_vacuum_state(0.5, FockCutoff{30});
        for (int n = 1; n < 31; n += 2) CHECK(psi.amp(n) == Complex(0.0, 0.0));
        CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
    }
    SUBCASE("x-variance matches (1-lambda)/(2(1+lambda))") {
        const auto rho = to_density(squeezed_vacuum_state(0.5, FockCutoff{40}));
        CHECK(quadrature_variance(rho, 0, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
        // anti-squeezed along p
        CHECK(quadrature_variance(rho, 0, M_PI / 2.0) == doctest::Approx(1.5).epsilon(1e-9));
    }
    SUBCASE("mean photon number is sinh^2 r") {
        const auto rho = to_density(squeezed_vacuum_state(0.5, FockCutoff{40}));
        CHECK(mean_photon(rho, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
        CHECK(mean_photon(to_density(vacuum_state({8})), 0) == 0.0);
    }
    SUBCASE("negative lambda squeezes p instead") {
        const auto rho = to_density(squeezed_vacuum_state(-0.5, FockCutoff{40}));
        CHECK(quadrature_variance(rho, 0, M_PI / 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    }
    SUBCASE("inadequate cutoff is rejected") {
        CHECK_THROWS_AS(squeezed_vacuum_state(0.5, FockCutoff{8}), CutoffTooSmall);
        CHECK_THROWS_AS(squeezed_vacuum_state(0.5, FockCutoff{1}), CutoffTooSmall);
    }
    SUBCASE("tail mass bound is exact") {
        CHECK(squeezed_tail_mass(0.5, 40) < 1e-10);
        CHECK(squeezed_tail_mass(0.5, 8) > 1e-10);
        CHECK(squeezed_tail_mass(0.0, 2) == 0.0);
    }
}

TEST_CASE("beam splitter") {
    SUBCASE("theta = 0 is the identity") {
        const auto psi = random_state({6, 6}, 11);
        const auto out = beam_splitter(psi, 0, 1, 0.0);
        CHECK((out.amp - psi.amp).norm() < 1e-12);
    }
    SUBCASE("one photon splits with the stated sign convention") {
        FockStateVector psi = vacuum_state({3, 3});
        psi.amp.setZero();
        psi.amp(1 * 3 + 0) = 1.0;  // |1, 0>
        const auto out = beam_splitter(psi, 0, 1, M_PI / 4.0);
        const double c = std::cos(M_PI / 4.0);
        CHECK(std::abs(out.amp(1 * 3 + 0) - c) < 1e-12);   // cos |1,0>
        CHECK(std::abs(out.amp(0 * 3 + 1) + c) < 1e-12);   // -sin |0,1>
    }
    SUBCASE("norm is preserved on non-truncated sectors") {
        // Sectors with more quanta than either mode can hold individually are
        // incomplete in the truncated basis and may only lose mass.
        auto psi = random_state({7, 7}, 23);
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                if (a + b > 6) psi.amp(a * 7 + b) = 0.0;
        psi.amp.normalize();
        const auto out = beam_splitter(psi, 0, 1, 0.3);
        CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }
    SUBCASE("total photon number per pair is conserved") {
        auto psi = random_state({9, 9}, 37);
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b)
                if (a + b > 8) psi.amp(a * 9 + b) = 0.0;
        psi.amp.normalize();
        const auto out = beam_splitter(psi, 0, 1, 0.7);
        const auto before = sector_masses(psi);
        const auto after = sector_masses(out);
        CHECK((before - after).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("truncated sectors only lose mass") {
        const auto psi = random_state({6, 6}, 41);
        const auto out = beam_splitter(psi, 0, 1, 0.7);
        const auto before = sector_masses(psi);
        const auto after = sector_masses(out);
        for (int n = 0; n < before.size(); ++n) CHECK(after(n) <= before(n) + 1e-12);
        CHECK(out.norm() <= 1.0 + 1e-12);
    }
    SUBCASE("sector matrices are orthogonal") {
        for (int total : {1, 5, 20, 60}) {
            const auto u = beam_splitter_sector(total, 0.46);
            const double defect =
                (u.transpose() * u - Eigen::MatrixXd::Identity(total + 1, total + 1))
                    .cwiseAbs()
                    .maxCoeff();
            CHECK(defect < 1e-12);
        }
    }
    SUBCASE("tap coefficients match the sector unitary") {
        // V |n, 0> = sum_c sqrt(binom) T^{(n-c)/2} (-sqrt(R))^c |n-c, c>
        const double tap_t = 0.9;
        const double theta = std::atan(std::sqrt((1.0 - tap_t) / tap_t));
        const int n = 5;
        FockStateVector psi = vacuum_state({8, 8});
        psi.amp.setZero();
        psi.amp(n * 8 + 0) = 1.0;
        const auto out = beam_splitter(psi, 0, 1, theta);
        double binom = 1.0;
        for (int c = 0; c <= n; ++c) {
            if (c > 0) binom *= static_cast<double>(n - c + 1) / c;
            const double expected = std::sqrt(binom * std::pow(tap_t, n - c) *
                                              std::pow(1.0 - tap_t, c)) *
                                    (c % 2 == 0 ? 1.0 : -1.0);
            CHECK(std::abs(out.amp((n - c) * 8 + c) - expected) < 1e-12);
        }
    }
    SUBCASE("density conjugation matches the pure-state route") {
        const auto psi = random_state({5, 5}, 51);
        const auto via_state = to_density(beam_splitter(psi, 0, 1, 0.4));
        const auto via_density = beam_splitter(to_density(psi), 0, 1, 0.4);
        CHECK((via_state.rho - via_density.rho).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("mode validation") {
        const auto psi = random_state({4, 4}, 3);
        CHECK_THROWS_AS(beam_splitter(psi, 0, 0, 0.3), std::invalid_argument);
        CHECK_THROWS_AS(beam_splitter(psi, 0, 2, 0.3), std::invalid_argument);
    }
}

TEST_CASE("on-off POVM") {
    SUBCASE("ideal detector projects onto vacuum") {
        const auto [off, on] = on_off_povm(DetectorModel{1.0, 0.0}, FockCutoff{6});
        CHECK(off.weights(0) == 1.0);
        for (int n = 1; n <= 6; ++n) CHECK(off.weights(n) == 0.0);
    }
    SUBCASE("practical weights") {
        const auto [off, on] = on_off_povm(DetectorModel{0.6, 1e-3}, FockCutoff{6});
        CHECK(off.weights(1) == doctest::Approx(std::exp(-1e-3) * 0.4).epsilon(1e-15));
        CHECK(off.weights(1) == doctest::Approx(0.3996).epsilon(1e-4));
    }
    SUBCASE("completeness is exact") {
        const auto [off, on] = on_off_povm(DetectorModel{0.37, 0.02}, FockCutoff{9});
        for (int n = 0; n <= 9; ++n) CHECK(off.weights(n) + on.weights(n) == 1.0);
    }
}

TEST_CASE("attenuation channel") {
    const auto rho = to_density(squeezed_vacuum_state(0.5, FockCutoff{36}));
    const auto lossy = attenuate(rho, 0, 0.75);
    SUBCASE("trace preserved") {
        CHECK(std::abs(lossy.trace() - 1.0) < 1e-10);
    }
    SUBCASE("mean photon number scales by the transmittance") {
        CHECK(mean_photon(lossy, 0) ==
              doctest::Approx(0.75 * mean_photon(rho, 0)).epsilon(1e-10));
    }
    SUBCASE("vacuum is a fixed point") {
        const auto vac = to_density(vacuum_state({8}));
        const auto out = attenuate(vac, 0, 0.6);
        CHECK((out.rho - vac.rho).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("displacement") {
    SUBCASE("zero displacement is the identity") {
        const auto rho = to_density(squeezed_vacuum_state(0.3, FockCutoff{24}));
        const auto out = displace(rho, 0, 0.0, 0.0);
        CHECK((out.rho - rho.rho).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("quadrature means shift by (x_s, p_s)") {
        const auto vac = to_density(vacuum_state({24}));
        const double x_s = std::sqrt(2.0) * 0.7;
        const auto out = displace(vac, 0, x_s, 0.0);
        const Mat x_op = quadrature_matrix(24, 0.0);
        const Mat p_op = quadrature_matrix(24, M_PI / 2.0);
        CHECK((out.rho * x_op).trace().real() == doctest::Approx(x_s).epsilon(1e-10));
        CHECK(std::abs((out.rho * p_op).trace().real()) < 1e-10);
        CHECK(std::abs(out.trace() - 1.0) < 1e-8);
    }
    SUBCASE("clipped displacement is rejected") {
        const auto vac = to_density(vacuum_state({6}));
        CHECK_THROWS_AS(displace(vac, 0, 6.0, 0.0), CutoffTooSmall);
    }
}

TEST_CASE("partial trace and mode observables") {
    const auto a = squeezed_vacuum_state(0.4, FockCutoff{24});
    const auto b = squeezed_vacuum_state(-0.3, FockCutoff{24});
    const auto rho = to_density(tensor_product(a, b));

    const auto rho_a = partial_trace_keep(rho, {0});
    const auto rho_b = partial_trace_keep(rho, {1});
    CHECK(std::abs(rho_a.trace() - 1.0) < 1e-10);  // truncated-state norm
    CHECK((rho_a.rho - to_density(a).rho).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((rho_b.rho - to_density(b).rho).cwiseAbs().maxCoeff() < 1e-10);

    CHECK(mean_photon(rho, 0) == doctest::Approx(mean_photon(rho_a, 0)).epsilon(1e-12));
    CHECK(vacuum_overlap(rho, 1) ==
          doctest::Approx(rho_b.rho(0, 0).real()).epsilon(1e-12));
}
