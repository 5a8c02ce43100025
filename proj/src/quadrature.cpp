#include "nongauss/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nongauss {

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    nodes.resize(order);
    weights.resize(order);

    // Newton iteration on P_n from the Chebyshev initial guess.
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int n = 2; n <= order; ++n) {
                const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes(i) = -x;
        nodes(order - 1 - i) = x;
        weights(i) = w;
        weights(order - 1 - i) = w;
    }
}

namespace {

const GaussLegendre& cached_rule(int order) {
    static std::mutex mutex;
    static std::map<int, GaussLegendre> cache;
    const std::scoped_lock lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, GaussLegendre(order)).first;
    return it->second;
}

}  // namespace

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order) {
    const GaussLegendre& rule = cached_rule(order);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        for (int k = 0; k < order; ++k) {
            total += rule.weights(k) * f(mid + 0.5 * h * rule.nodes(k));
        }
    }
    return total * 0.5 * h;
}

double integrate_to_tol(const std::function<double(double)>& f, double a, double b,
                        double tol, int base_panels, int order, int max_doublings) {
    double prev = integrate_panels(f, a, b, base_panels, order);
    int panels = base_panels;
    for (int i = 0; i < max_doublings; ++i) {
        panels *= 2;
        const double next = integrate_panels(f, a, b, panels, order);
        if (std::abs(next - prev) < tol) return next;
        prev = next;
    }
    return prev;
}

}  // namespace nongauss
