#pragma once

#include <Eigen/Dense>
#include <functional>

namespace nongauss {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    explicit GaussLegendre(int order);
};

// Integrate f over [a, b] with `panels` equal panels of the given order.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order = 16);

// Panel-doubling refinement until successive estimates differ by less than
// tol (absolute), starting from base_panels.
double integrate_to_tol(const std::function<double(double)>& f, double a, double b,
                        double tol, int base_panels = 8, int order = 16,
                        int max_doublings = 8);

}  // namespace nongauss
