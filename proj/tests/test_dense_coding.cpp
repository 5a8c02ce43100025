#include <doctest.h>

#include <cmath>

#include "nongauss/closed_form.hpp"
#include "nongauss/dense_coding.hpp"

using namespace nongauss;

namespace {

// Taylor-series oracle for the defining integral (2/sqrt(pi)) Int_0^x e^{-t^2} dt,
// summed to convergence; accurate near machine precision for |x| <= 3.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / n;
        const double add = term / (2.0 * n + 1.0);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 / std::sqrt(M_PI) * sum;
}

ExperimentConfig two_mode_ideal(double lambda) {
    return ExperimentConfig::ideal(lambda, 0.9, Scheme::TwoMode);
}

ExperimentConfig two_mode_practical(double lambda) {
    return ExperimentConfig::practical(lambda, 0.9, 0.75, 0.6, 1e-3, Scheme::TwoMode);
}

}  // namespace

TEST_CASE("error function") {
    CHECK(nongauss::erf(0.0) == 0.0);
    CHECK(nongauss::erf(1.0) == doctest::Approx(0.842700792950).epsilon(1e-12));
    CHECK(std::abs(nongauss::erf(6.0) - 1.0) < 1e-15);
    for (double x = -3.0; x <= 3.0; x += 0.173) {
        CHECK(nongauss::erf(x) == doctest::Approx(erf_series(x)).epsilon(5e-13));
        CHECK(nongauss::erf(-x) == doctest::Approx(-nongauss::erf(x)).epsilon(1e-15));
    }
    CHECK(nongauss::erf(40.0) == 1.0);
    CHECK(nongauss::erf(-40.0) == -1.0);
}

TEST_CASE("omega table") {
    SUBCASE("no squeezing gives unit omegas") {
        const auto table = omega_table(two_mode_practical(0.0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(table.value[i][j] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("symmetric in (i, j)") {
        const auto table = omega_table(two_mode_practical(0.37));
        CHECK(table.value[0][1] == doctest::Approx(table.value[1][0]).epsilon(1e-15));
    }
    SUBCASE("frozen ideal value at lambda=0.4") {
        const auto table = omega_table(two_mode_ideal(0.4));
        CHECK(table.value[1][1] == doctest::Approx(std::sqrt(0.84 / 0.408)).epsilon(1e-12));
    }
    SUBCASE("consistent with the Bell-mixture widths") {
        const auto config = two_mode_practical(0.42);
        const auto table = omega_table(config);
        const auto mix = homodyne_mixture(config, 0.0);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                // per-axis coefficient is E/(2D) = Omega^2/2
                CHECK(2.0 * mix.components[2 * i + j].coeff_x ==
                      doctest::Approx(table.value[i][j] * table.value[i][j]).epsilon(1e-12));
            }
        }
    }
    SUBCASE("single-mode scheme rejected") {
        CHECK_THROWS_AS(omega_table(ExperimentConfig::ideal(0.4, 0.9, Scheme::SingleMode)),
                        std::invalid_argument);
    }
}

TEST_CASE("channel matrix") {
    SUBCASE("alpha = 0 erases all information") {
        const auto cm = channel_matrix(two_mode_ideal(0.4), SignalAlphabet{0.0});
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(cm.p(a, b) == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("alpha -> infinity separates the symbols") {
        const auto cm = channel_matrix(two_mode_ideal(0.5), SignalAlphabet{50.0});
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                CHECK(cm.p(a, b) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
    }
    SUBCASE("rows are stochastic") {
        for (const auto& config : {two_mode_ideal(0.3), two_mode_practical(0.55)}) {
            const auto cm = channel_matrix(config, SignalAlphabet{1.5});
            for (int a = 0; a < 4; ++a) {
                CHECK(cm.p.row(a).sum() == doctest::Approx(1.0).epsilon(1e-12));
                for (int b = 0; b < 4; ++b) {
                    CHECK(cm.p(a, b) >= 0.0);
                    CHECK(cm.p(a, b) <= 1.0);
                }
            }
            CHECK_NOTHROW(cm.validate(1e-12));
        }
    }
    SUBCASE("entries depend only on the error pattern") {
        const auto cm = channel_matrix(two_mode_practical(0.45), SignalAlphabet{0.9});
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m)
                    for (int n = 0; n < 2; ++n)
                        CHECK(cm.p(2 * k + l, 2 * m + n) ==
                              doctest::Approx(cm.p(2 * (k ^ 1) + l, 2 * (m ^ 1) + n))
                                  .epsilon(1e-15));
        // at most three distinct values: diagonal, one-bit, two-bit
        CHECK(cm.p(0, 1) == doctest::Approx(cm.p(0, 2)).epsilon(1e-15));
    }
    SUBCASE("degenerate ideal conditioning at lambda=0") {
        CHECK_THROWS_AS(channel_matrix(two_mode_ideal(0.0), SignalAlphabet{1.5}),
                        DegenerateConditioning);
    }
    SUBCASE("single-mode scheme rejected") {
        CHECK_THROWS_AS(
            channel_matrix(ExperimentConfig::ideal(0.4, 0.9, Scheme::SingleMode), SignalAlphabet{1.5}),
            std::invalid_argument);
    }
}

TEST_CASE("mutual information") {
    SUBCASE("uniform channel carries nothing") {
        ChannelMatrix cm;
        cm.p.setConstant(0.25);
        CHECK(mutual_information(cm) == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("noiseless 4-ary channel carries two bits") {
        ChannelMatrix cm;
        cm.p = Eigen::Matrix4d::Identity();
        CHECK(mutual_information(cm) == doctest::Approx(2.0).epsilon(1e-15));
    }
    SUBCASE("normalization is enforced") {
        ChannelMatrix cm;
        cm.p.setConstant(0.3);
        CHECK_THROWS_AS(mutual_information(cm), InvalidDistribution);

        ChannelMatrix ok;
        ok.p = Eigen::Matrix4d::Identity();
        CHECK_THROWS_AS(mutual_information(ok, Eigen::Vector4d(0.5, 0.5, 0.5, 0.5)),
                        InvalidDistribution);
    }
    SUBCASE("post-processing cannot add information") {
        const auto cm = channel_matrix(two_mode_ideal(0.4), SignalAlphabet{1.0});
        Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();
        // stochastic confusion: keep with 0.8, flip one bit with 0.1 each
        for (int b = 0; b < 4; ++b) {
            flip(b, b) = 0.8;
            flip(b, b ^ 1) += 0.1;
            flip(b, b ^ 2) += 0.1;
        }
        ChannelMatrix degraded;
        degraded.p = cm.p * flip;
        CHECK(mutual_information(degraded) <= mutual_information(cm) + 1e-12);
    }
    SUBCASE("more displacement never hurts quadrant decisions") {
        for (const auto& config : {two_mode_ideal(0.4), two_mode_practical(0.4)}) {
            double prev = -1.0;
            for (double alpha = 0.1; alpha <= 3.001; alpha += 0.1) {
                const double mi = mutual_information(channel_matrix(config, SignalAlphabet{alpha}));
                CHECK(mi >= prev - 1e-12);
                prev = mi;
            }
        }
    }
    SUBCASE("approaches two bits as lambda -> 1") {
        CHECK(mutual_information(channel_matrix(two_mode_ideal(0.99), SignalAlphabet{1.5})) >
              1.9);
    }
}

TEST_CASE("reference channel matrix") {
    SUBCASE("rows are stochastic and symmetric") {
        const auto cm = reference_channel_matrix(0.4, SignalAlphabet{1.5}, true, 0.75);
        for (int a = 0; a < 4; ++a) {
            CHECK(cm.p.row(a).sum() == doctest::Approx(1.0).epsilon(1e-12));
        }
        CHECK(cm.p(0, 1) == doctest::Approx(cm.p(0, 2)).epsilon(1e-15));
    }
    SUBCASE("factorizes through the squeezed-vacuum width") {
        const double lambda = 0.3;
        const auto cm = reference_channel_matrix(lambda, SignalAlphabet{0.7}, false, 1.0);
        const double sigma = std::sqrt((1.0 - lambda) / (1.0 + lambda));
        const double q = (1.0 + nongauss::erf(0.7 / sigma)) / 2.0;
        CHECK(cm.p(0, 0) == doctest::Approx(q * q).epsilon(1e-12));
    }
}
