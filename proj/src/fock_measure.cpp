#include "nongauss/fock/measure.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "nongauss/fock/ops.hpp"
#include "nongauss/quadrature.hpp"

namespace nongauss::fock {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// <m|v_{phi=pi/2}> phases: i^m psi_m(v).
Vec p_port_vector(int dim, double v) {
    const Eigen::VectorXd psi = hermite_functions(dim - 1, v);
    Vec h(dim);
    Complex phase(1.0, 0.0);
    for (int m = 0; m < dim; ++m) {
        h(m) = phase * psi(m);
        phase *= kI;
    }
    return h;
}

// Joint pdf of x on port A and p on port B for an (already recombined)
// two-mode state.
double ports_pdf(const Mat& rho, int dim_a, int dim_b, double u, double v) {
    const Eigen::VectorXd g = hermite_functions(dim_a - 1, u);
    const Vec h = p_port_vector(dim_b, v);
    Vec f(static_cast<long>(dim_a) * dim_b);
    for (int n = 0; n < dim_a; ++n) f.segment(static_cast<long>(n) * dim_b, dim_b) = g(n) * h;
    return (f.adjoint() * rho * f)(0, 0).real();
}

}  // namespace

Eigen::VectorXd hermite_functions(int n_max, double x) {
    Eigen::VectorXd psi(n_max + 1);
    psi(0) = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    if (n_max == 0) return psi;
    psi(1) = std::sqrt(2.0) * x * psi(0);
    for (int n = 1; n < n_max; ++n) {
        psi(n + 1) = std::sqrt(2.0 / (n + 1.0)) * x * psi(n) -
                     std::sqrt(static_cast<double>(n) / (n + 1.0)) * psi(n - 1);
    }
    return psi;
}

double quadrature_pdf_single(const Mat& rho_single, double quad_phase, double x) {
    const int dim = static_cast<int>(rho_single.rows());
    const Eigen::VectorXd psi = hermite_functions(dim - 1, x);
    Vec u(dim);
    for (int n = 0; n < dim; ++n) u(n) = std::exp(kI * (quad_phase * n)) * psi(n);
    return (u.adjoint() * rho_single * u)(0, 0).real();
}

double quadrature_pdf(const DensityOperator& rho, int mode, double quad_phase, double x) {
    const DensityOperator reduced = partial_trace_keep(rho, {mode});
    return quadrature_pdf_single(reduced.rho, quad_phase, x);
}

double quadrature_variance(const DensityOperator& rho, int mode, double quad_phase) {
    const DensityOperator reduced = partial_trace_keep(rho, {mode});
    const Mat x_op = quadrature_matrix(rho.dims[mode], quad_phase);
    const double m1 = (reduced.rho * x_op).trace().real();
    const double m2 = (reduced.rho * x_op * x_op).trace().real();
    return m2 - m1 * m1;
}

double bell_pdf(const DensityOperator& rho_two_mode, double x, double p) {
    require(rho_two_mode.mode_count() == 2, "Bell pdf needs a two-mode state");
    const DensityOperator rt = beam_splitter(rho_two_mode, 0, 1, -kPi / 4.0);
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    return 0.5 * ports_pdf(rt.rho, rt.dims[0], rt.dims[1], x * inv_rt2, p * inv_rt2);
}

Eigen::MatrixXd bell_pdf_grid(const DensityOperator& rho_two_mode,
                              const Eigen::VectorXd& xs, const Eigen::VectorXd& ps) {
    require(rho_two_mode.mode_count() == 2, "Bell pdf needs a two-mode state");
    const DensityOperator rt = beam_splitter(rho_two_mode, 0, 1, -kPi / 4.0);
    const int da = rt.dims[0];
    const int db = rt.dims[1];
    const double inv_rt2 = 1.0 / std::sqrt(2.0);

    Eigen::MatrixXd out(xs.size(), ps.size());
    Mat y(static_cast<long>(da) * db, da);
    Mat b(da, da);
    for (long j = 0; j < ps.size(); ++j) {
        const Vec h = p_port_vector(db, ps(j) * inv_rt2);
        // Contract mode B on both sides: B = (I (x) h)^dag rho (I (x) h).
        for (int n2 = 0; n2 < da; ++n2) {
            y.col(n2) = rt.rho.middleCols(static_cast<long>(n2) * db, db) * h;
        }
        for (int n1 = 0; n1 < da; ++n1) {
            b.row(n1) = h.adjoint() * y.middleRows(static_cast<long>(n1) * db, db);
        }
        for (long i = 0; i < xs.size(); ++i) {
            const Eigen::VectorXd g = hermite_functions(da - 1, xs(i) * inv_rt2);
            const Vec gc = g.cast<Complex>();
            out(i, j) = 0.5 * (gc.adjoint() * b * gc)(0, 0).real();
        }
    }
    return out;
}

double wigner(const DensityOperator& rho_single_mode, double x, double p) {
    require(rho_single_mode.mode_count() == 1, "Wigner transform needs a single-mode state");
    const Mat& rho = rho_single_mode.rho;
    const int dim = static_cast<int>(rho.rows());

    const double reach = std::sqrt(2.0 * dim + 1.0) + 6.0;
    // psi(x-y) and psi(x+y) overlap only for |y| <= reach - |x|.
    const double y_half = std::max(1.0, reach - std::abs(x));
    const auto integrand = [&](double y) {
        const Eigen::VectorXd left = hermite_functions(dim - 1, x - y);
        const Eigen::VectorXd right = hermite_functions(dim - 1, x + y);
        const Complex q = (left.cast<Complex>().adjoint() * rho * right.cast<Complex>())(0, 0);
        return (std::exp(Complex(0.0, -2.0 * p * y)) * q).real();
    };

    // Panel width below a half oscillation period of e^{-2ipy}; order-16
    // Gauss-Legendre resolves that to machine precision.
    const double max_width = std::min(2.0, kPi / (2.0 * std::abs(p) + 1e-12));
    const int base_panels = std::max(16, static_cast<int>(std::ceil(2.0 * y_half / max_width)));
    const double integral =
        integrate_to_tol(integrand, -y_half, y_half, 1e-10, base_panels, 16, 3);
    return integral / kPi;
}

double bell_variance_x(const DensityOperator& rho_two_mode) {
    require(rho_two_mode.mode_count() == 2, "Bell variance needs a two-mode state");
    const DensityOperator rt = beam_splitter(rho_two_mode, 0, 1, -kPi / 4.0);
    // x = x_A - x_B measures sqrt(2) * x on the recombined port A.
    return 2.0 * quadrature_variance(rt, 0, 0.0);
}

double trace_distance(const Mat& a, const Mat& b) {
    Eigen::SelfAdjointEigenSolver<Mat> es(a - b);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace nongauss::fock
